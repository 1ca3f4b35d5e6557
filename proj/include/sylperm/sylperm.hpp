#pragma once

#include "sylperm/analysis.hpp"
#include "sylperm/classes.hpp"
#include "sylperm/cocyclic.hpp"
#include "sylperm/hadamard.hpp"
#include "sylperm/int128.hpp"
#include "sylperm/matrix.hpp"
#include "sylperm/opcount.hpp"
#include "sylperm/permanent.hpp"
#include "sylperm/phi.hpp"
#include "sylperm/sior.hpp"
#include "sylperm/verify.hpp"
