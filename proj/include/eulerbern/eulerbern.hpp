#pragma once

#include "eulerbern/bernstein.hpp"
#include "eulerbern/binomial.hpp"
#include "eulerbern/errors.hpp"
#include "eulerbern/euler.hpp"
#include "eulerbern/fermint.hpp"
#include "eulerbern/identities/closed_forms.hpp"
#include "eulerbern/identities/product_spec.hpp"
#include "eulerbern/identities/report.hpp"
#include "eulerbern/identities/suites.hpp"
#include "eulerbern/padic.hpp"
#include "eulerbern/poly.hpp"
#include "eulerbern/rational.hpp"
