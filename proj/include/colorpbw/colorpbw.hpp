#pragma once

#include "algebra.hpp"
#include "driver.hpp"
#include "grading.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "specfile.hpp"
#include "tensor.hpp"
#include "uea.hpp"
