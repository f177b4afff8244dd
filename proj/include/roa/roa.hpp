#ifndef ROA_ROA_HPP
#define ROA_ROA_HPP

#include "analysis.hpp"
#include "core.hpp"
#include "full.hpp"
#include "io.hpp"
#include "member.hpp"
#include "nbw.hpp"
#include "ngbw.hpp"
#include "profile.hpp"
#include "rank.hpp"
#include "search.hpp"

#endif  // ROA_ROA_HPP
