#include "qh/identify.hpp"
