#ifndef SKEWFORCE_ERRORS_HPP
#define SKEWFORCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewforce {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

// Malformed graph, hypergraph, vertex set or JSON document.
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "validation"; }
};

// Operation called on a graph class it does not support (e.g. a
// non-bipartite graph handed to the matching routines).
class UnsupportedClassError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "unsupported_class"; }
};

// Exhaustive routine refused because the instance exceeds its size cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& operation, int n, int cap)
        : Error(operation + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
          n_(n), cap_(cap) {}
    int n() const noexcept { return n_; }
    int cap() const noexcept { return cap_; }
    const char* kind() const noexcept override { return "cap_exceeded"; }

private:
    int n_;
    int cap_;
};

// A theorem's hypothesis does not hold for the given instance.
class HypothesisError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "hypothesis"; }
};

} // namespace skewforce

#endif // SKEWFORCE_ERRORS_HPP
