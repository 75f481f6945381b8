#pragma once

#include "qcat/errors.hpp"
#include "qcat/padic.hpp"
#include "qcat/group.hpp"
#include "qcat/cochain.hpp"
#include "qcat/extension.hpp"
#include "qcat/splitting.hpp"
#include "qcat/family.hpp"
#include "qcat/category.hpp"
#include "qcat/skeleton.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/io.hpp"
