/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef GDM_GUARD_GDM_ERRORS_HH
#define GDM_GUARD_GDM_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace gdm
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Arguments outside an operation's domain.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed text input: graph files, labelings, group specs.
    class FormatError : public Error
    {
    public:
        using Error::Error;
    };

    /// Arithmetic between elements of different groups.
    class StructuralError : public Error
    {
    public:
        using Error::Error;
    };

    /// Multiplication by r is not an automorphism.
    class NotInvertible : public Error
    {
    public:
        using Error::Error;
    };

    /// The requested object provably does not exist; what() names the violated condition.
    class NotExists : public Error
    {
    public:
        using Error::Error;
    };

    /// A construction's hypothesis fails; what() names it.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
