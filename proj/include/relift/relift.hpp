#pragma once

#include "relift/bcc.hpp"
#include "relift/coalgebra.hpp"
#include "relift/downsets.hpp"
#include "relift/enumerate.hpp"
#include "relift/errors.hpp"
#include "relift/functor.hpp"
#include "relift/functor_parse.hpp"
#include "relift/json_io.hpp"
#include "relift/preorder.hpp"
#include "relift/random.hpp"
#include "relift/relation.hpp"
#include "relift/span.hpp"
#include "relift/square.hpp"
