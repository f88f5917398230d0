#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "casson/errors.hpp"

// Checks that an expression throws casson::Error with the given stable name.
#define CHECK_ERROR_NAME(expr, expected)                       \
    do {                                                       \
        bool caught_ = false;                                  \
        try {                                                  \
            (void)(expr);                                      \
        } catch (const casson::Error& err_) {                  \
            caught_ = true;                                    \
            CHECK(err_.name() == (expected));                  \
        }                                                      \
        CHECK(caught_);                                        \
    } while (0)
