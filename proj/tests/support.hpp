#pragma once

#include <doctest.h>
#include <string>
#include <vector>

#include "uniauto/symbols.hpp"

namespace doctest {

template <>
struct StringMaker<std::u32string> {
    static String convert(const std::u32string& w) { return ("\"" + uniauto::to_utf8(w) + "\"").c_str(); }
};

template <>
struct StringMaker<std::vector<std::u32string>> {
    static String convert(const std::vector<std::u32string>& ws)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < ws.size(); ++i)
            s += (i ? ", \"" : "\"") + uniauto::to_utf8(ws[i]) + "\"";
        return (s + "}").c_str();
    }
};

}  // namespace doctest

using Words = std::vector<std::u32string>;
