#pragma once

#include <stdexcept>
#include <string>

namespace lds
{
    // Every error raised by the library derives from Error, so callers that do
    // not care about the category can catch one type.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidPair : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidParams : public Error
    {
    public:
        using Error::Error;
    };

    class UnsupportedParams : public Error
    {
    public:
        using Error::Error;
    };

    class IncompleteInput : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidWitness : public Error
    {
    public:
        using Error::Error;
    };

    class InstanceTooLarge : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(int line, int column, const std::string & what) :
            Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
            _line(line),
            _column(column)
        {
        }

        auto line() const -> int { return _line; }
        auto column() const -> int { return _column; }

    private:
        int _line;
        int _column;
    };
}
