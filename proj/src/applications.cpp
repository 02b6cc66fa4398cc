#include "planq/applications.hpp"
