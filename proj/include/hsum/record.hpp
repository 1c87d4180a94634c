#pragma once

#include <string>

#include "hsum/dual.hpp"
#include "hsum/rational.hpp"

namespace hsum {

enum class check_kind {
    theorem,
    kernel,
    relation,
    derivation,
    cv_base,
};

inline std::string to_string(check_kind c) {
    switch (c) {
        case check_kind::theorem: return "theorem";
        case check_kind::kernel: return "kernel";
        case check_kind::relation: return "relation";
        case check_kind::derivation: return "derivation";
        case check_kind::cv_base: return "cv-base";
    }
    return "unknown";
}

enum class check_status { ok, pole_skipped, error };

inline std::string to_string(check_status s) {
    switch (s) {
        case check_status::ok: return "ok";
        case check_status::pole_skipped: return "pole-skipped";
        case check_status::error: return "error";
    }
    return "unknown";
}

// Serialized scalar: rationals carry just a value, duals a value and a slope.
struct scalar_repr {
    std::string value;
    std::string slope;
    bool has_slope = false;

    bool operator==(const scalar_repr&) const = default;

    // One-field flattening for text/csv cells (no commas, csv-safe).
    std::string flat() const {
        if (!has_slope) return value;
        return "value=" + value + ";slope=" + slope;
    }
};

inline scalar_repr make_repr(const rational& x) {
    return scalar_repr{x.to_string(), "", false};
}

inline scalar_repr make_repr(const dual& x) {
    return scalar_repr{x.value().to_string(), x.slope().to_string(), true};
}

// One verified fact.  `equal` is exact equality of lhs and rhs; `micros` is
// always serialized as 0 so that report bytes are reproducible across runs
// and worker counts (wall time is reported separately on the summary line).
struct verification_record {
    check_kind check = check_kind::theorem;
    std::string id;
    long long n = 0;
    scalar_repr lhs;
    scalar_repr rhs;
    bool equal = false;
    check_status status = check_status::ok;
    long long micros = 0;
};

}  // namespace hsum
