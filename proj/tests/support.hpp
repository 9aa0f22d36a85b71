#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qalg/presentation.hpp"

#ifndef QALG_DATA_DIR
#define QALG_DATA_DIR "data"
#endif

namespace testing {

inline std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(QALG_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// fixed seed so failures reproduce
inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240601);
    return g;
}

}  // namespace testing
