#pragma once

#include "omstat/core.hpp"
#include "omstat/qpoly.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace omstat {

// Column of each north step, rows bottom to top.
struct DyckPath {
    std::vector<int> cols;
    int rows() const { return static_cast<int>(cols.size()); }
    bool valid() const;
    bool operator==(const DyckPath&) const = default;
};

// Label 0 is a blank valley.
struct ParkingFunction {
    DyckPath path;
    std::vector<Letter> labels;
    int rows() const { return path.rows(); }
    bool operator==(const ParkingFunction&) const = default;
};

enum class DecorationKind { rise, valley };

struct DecoratedParkingFunction {
    ParkingFunction pf;
    DecorationKind kind = DecorationKind::rise;
    std::set<int> marks;  // 1-indexed rows
    bool operator==(const DecoratedParkingFunction&) const = default;
};

// Column-strict, zeros only after an east step; row 1 may hold a 0 only when allowed.
bool is_valid_pf(const ParkingFunction& pf, bool allow_zero_in_first_row = false);

std::vector<int> area_vector(const ParkingFunction& pf);
std::vector<int> dinv_vector(const ParkingFunction& pf);
long area(const ParkingFunction& pf);
long dinv(const ParkingFunction& pf);

// Sets of 1-indexed rows in 2..N.
std::set<int> rise_set(const ParkingFunction& pf);
std::set<int> val_set(const ParkingFunction& pf);
std::set<int> valley_set(const ParkingFunction& pf);          // a_i < a_{i-1}
std::set<int> blank_eligible_rows(const ParkingFunction& pf);  // a_i <= a_{i-1}

// Throw std::invalid_argument when the marks are not contained in Rise / Val.
long area_minus(const ParkingFunction& pf, const std::set<int>& R);
long dinv_minus(const ParkingFunction& pf, const std::set<int>& V);

// Multiset {0^r, 1^beta_1, ...} carried by the labels.
Content pf_content(const ParkingFunction& pf);

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& visit);
void for_each_pf(const Content& content, const std::function<void(const ParkingFunction&)>& visit);
// Without a content filter the nonzero labels range over 1..n_cars.
std::vector<ParkingFunction> enumerate_pfs(int n_cars, int r, const std::optional<Composition>& content = {});
std::vector<DecoratedParkingFunction> enumerate_decorations(const ParkingFunction& pf, DecorationKind kind, int count);

// Content-restricted generating functions with n-k-1 marks.
QTPoly rise_gf(int n, int k, int r, const Composition& beta);
QTPoly val_gf(int n, int k, int r, const Composition& beta);

nlohmann::json to_json(const DecoratedParkingFunction& d);
DecoratedParkingFunction decorated_from_json(const nlohmann::json& j);
const char* kind_name(DecorationKind k);

}  // namespace omstat
