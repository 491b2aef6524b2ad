#pragma once

#include <stdexcept>
#include <string>

namespace funnelgroup {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHyperbolic : public Error {
public:
    using Error::Error;
};

class InfiniteFixedPoint : public Error {
public:
    using Error::Error;
};

class PoleHit : public Error {
public:
    using Error::Error;
};

class PoleInsideInterval : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class UseBaseBuilder : public Error {
public:
    UseBaseBuilder();
};

/// A rank-1 group has a two-point limit set; the hull is the single axis.
class DegenerateRankOne : public Error {
public:
    DegenerateRankOne(double repelling, double attracting);
    double repelling;
    double attracting;
};

class DepthOverflow : public Error {
public:
    DepthOverflow(std::size_t requested, std::size_t cap);
    std::size_t requested;
    std::size_t cap;
};

class NestingViolation : public Error {
public:
    using Error::Error;
};

class NoBracket : public Error {
public:
    using Error::Error;
};

class RankTooSmall : public Error {
public:
    using Error::Error;
};

class NonpositiveLength : public Error {
public:
    using Error::Error;
};

class NotReduced : public Error {
public:
    using Error::Error;
};

} // namespace funnelgroup
