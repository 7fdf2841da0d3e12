#pragma once

// Readable Catch2 expansions for library types.

#include "boundaryk/spaces.hpp"

#include <catch_amalgamated.hpp>

namespace Catch {

template <>
struct StringMaker<boundaryk::FgAbGroup> {
    static std::string convert(const boundaryk::FgAbGroup& g) { return g.to_string(); }
};

template <>
struct StringMaker<boundaryk::GradedGroup> {
    static std::string convert(const boundaryk::GradedGroup& g) {
        std::string out = "(";
        for (std::size_t i = 0; i < g.length(); ++i)
            out += (i ? ", " : "") + g.at(static_cast<long>(i)).to_string();
        return out + ")";
    }
};

template <>
struct StringMaker<boundaryk::Integer> {
    static std::string convert(const boundaryk::Integer& v) { return v.str(); }
};

}  // namespace Catch
