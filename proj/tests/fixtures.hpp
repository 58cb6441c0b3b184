#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

inline nlohmann::json load_fixture(const std::string& name)
{
    std::ifstream in(std::string(OMSTAT_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return nlohmann::json::parse(in);
}
