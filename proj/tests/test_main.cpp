// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
