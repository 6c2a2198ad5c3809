/* test_cli.cpp */

#include "doctest.h"
