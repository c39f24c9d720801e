#pragma once

#include "meterpark/count.hpp"
#include "meterpark/enumeration.hpp"
#include "meterpark/errors.hpp"
#include "meterpark/lace.hpp"
#include "meterpark/output.hpp"
#include "meterpark/parksim.hpp"
#include "meterpark/periodic.hpp"
#include "meterpark/search.hpp"
#include "meterpark/shuffle.hpp"
#include "meterpark/suites.hpp"
