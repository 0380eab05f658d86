#pragma once

#include <stdexcept>
#include <string>

namespace c2surf {

// Input text that does not match a grammar (words, surface specs).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that violates a mathematical precondition.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An oracle asked to work beyond its configured size bound.
class BoundError : public std::length_error {
public:
    explicit BoundError(const std::string& what) : std::length_error(what) {}
};

// A question the available invariants cannot answer.
class UndecidableError : public std::runtime_error {
public:
    explicit UndecidableError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace c2surf
