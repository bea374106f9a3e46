#pragma once

#include <stdexcept>
#include <string>

namespace partgen {

// Base of every error raised by the library. The CLI maps these to exit 3.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class empty_input : public error {
public:
    empty_input() : error("empty input: a composition needs at least one part") {}
};

class order_violation : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

class no_successor : public error {
public:
    using error::error;
};

class overflow_error : public error {
public:
    using error::error;
};

class capacity_error : public error {
public:
    using error::error;
};

class not_tabulated : public error {
public:
    using error::error;
};

class guard_violation : public error {
public:
    using error::error;
};

class already_started : public error {
public:
    already_started() : error("instrumented run already started") {}
};

class not_a_tape : public error {
public:
    not_a_tape() : error("not a tape: run was not recorded in full-tape mode") {}
};

} // namespace partgen
