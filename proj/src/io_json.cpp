#include "planq/io_json.hpp"
