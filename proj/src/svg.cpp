#include "planq/svg.hpp"
