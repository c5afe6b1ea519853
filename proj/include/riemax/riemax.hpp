#pragma once

#include "riemax/core/envelope.hpp"
#include "riemax/core/errors.hpp"
#include "riemax/core/manifold.hpp"
#include "riemax/core/point_cloud.hpp"
#include "riemax/core/scalar.hpp"
#include "riemax/gen/generators.hpp"
#include "riemax/io/csv.hpp"
#include "riemax/io/log.hpp"
#include "riemax/io/spd_json.hpp"
#include "riemax/io/summary.hpp"
#include "riemax/manifold/euclidean.hpp"
#include "riemax/manifold/klein.hpp"
#include "riemax/manifold/spd.hpp"
#include "riemax/oracle/certificate.hpp"
#include "riemax/oracle/growth.hpp"
#include "riemax/oracle/reference.hpp"
#include "riemax/oracle/welzl.hpp"
#include "riemax/solver/minimax.hpp"
#include "riemax/solver/schedule.hpp"
#include "riemax/solver/trace.hpp"
#include "riemax/theory/constants.hpp"
#include "riemax/theory/cosine_law.hpp"
#include "riemax/theory/rate_bound.hpp"
