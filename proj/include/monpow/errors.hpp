#ifndef MONPOW_ERRORS_HPP
#define MONPOW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monpow
{

// Exponent arithmetic left the 64-bit range.
class overflow_error : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

// A mathematical precondition of an operation does not hold.
class precondition_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class principal_ideal_error : public precondition_error
{
public:
    principal_ideal_error() : precondition_error("principal ideal") {}
};

// Thrown from long-running computations when their stop token fires.
class cancelled_error : public std::runtime_error
{
public:
    cancelled_error() : std::runtime_error("computation cancelled") {}
};

// An internal consistency check failed. Always a bug.
class invariant_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), m_position(position)
    {
    }

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

} // namespace monpow

#endif
