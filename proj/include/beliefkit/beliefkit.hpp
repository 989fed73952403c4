#pragma once

#include "beliefkit/formula.hpp"
#include "beliefkit/parse.hpp"
#include "beliefkit/literal.hpp"
#include "beliefkit/normal_form.hpp"
#include "beliefkit/model.hpp"
#include "beliefkit/prime_implicant.hpp"
#include "beliefkit/change.hpp"
#include "beliefkit/oracle.hpp"
#include "beliefkit/eliminant.hpp"
#include "beliefkit/postulate.hpp"
#include "beliefkit/blowup.hpp"
