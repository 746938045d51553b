#pragma once

#include "privword/bfile.hpp"
#include "privword/bigmath.hpp"
#include "privword/bounds.hpp"
#include "privword/enumerate.hpp"
#include "privword/languages.hpp"
#include "privword/linear.hpp"
#include "privword/naive.hpp"
#include "privword/verify.hpp"
#include "privword/word.hpp"
