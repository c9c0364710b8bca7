#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathbij {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCharacter : public Error {
public:
    explicit InvalidCharacter(std::size_t position)
        : Error("invalid path character at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NotGroundTerminated : public Error {
public:
    NotGroundTerminated() : Error("path does not end at ground level") {}
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class UnknownApex : public PreconditionViolated {
public:
    explicit UnknownApex(std::size_t vertex)
        : PreconditionViolated("vertex " + std::to_string(vertex) + " is not a peak apex"),
          vertex_(vertex) {}
    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class FlatNotAtHeightOne : public PreconditionViolated {
public:
    explicit FlatNotAtHeightOne(std::size_t step)
        : PreconditionViolated("flatstep " + std::to_string(step) + " is not at height 1") {}
};

class NotInClass : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

// An inverse stage met an input outside the image of its forward stage.
class InverseDomainError : public Error {
public:
    using Error::Error;
};

class MarkNotContractible : public InverseDomainError {
public:
    explicit MarkNotContractible(std::size_t vertex)
        : InverseDomainError("mark at vertex " + std::to_string(vertex) + " is not a DU valley at ground level"),
          vertex_(vertex) {}
    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class SizeTooLarge : public Error {
public:
    SizeTooLarge(std::size_t m, std::size_t bound)
        : Error("size " + std::to_string(m) + " exceeds exhaustive bound " + std::to_string(bound)) {}
};

class MalformedLine : public Error {
public:
    explicit MalformedLine(std::size_t line)
        : Error("malformed b-file line " + std::to_string(line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class NonContiguousIndex : public Error {
public:
    explicit NonContiguousIndex(std::size_t line)
        : Error("non-contiguous index at b-file line " + std::to_string(line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class RangeNotCovered : public Error {
public:
    using Error::Error;
};

} // namespace pathbij
