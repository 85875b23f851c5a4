#include "ttake/errors.hpp"
