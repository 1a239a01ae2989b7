#include "posetsat/family.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"

namespace posetsat {

int FamilySpec::top_rank() const {
    return family == Family::rpower ? r * n : n;
}

int FamilySpec::radix() const {
    switch (family) {
        case Family::boolean: return 2;
        case Family::rpower: return r + 1;
        case Family::subspace: return q;
    }
    return 0;
}

bool is_prime_power(long q) {
    if (q < 2) {
        return false;
    }
    long p = 2;
    while (p * p <= q && q % p != 0) {
        ++p;
    }
    if (q % p != 0) {
        return true;
    }
    while (q % p == 0) {
        q /= p;
    }
    return q == 1;
}

void validate(const FamilySpec& spec) {
    if (spec.n < 0) {
        throw ValidationError("n must be non-negative");
    }
    if (spec.n > 4096) {
        throw ValidationError("n is too large (limit 4096)");
    }
    switch (spec.family) {
        case Family::boolean:
            if (spec.q != 0 || spec.r != 0) {
                throw ValidationError("boolean family takes neither q nor r");
            }
            break;
        case Family::subspace:
            if (spec.r != 0) {
                throw ValidationError("subspace family does not take r");
            }
            if (!is_prime_power(spec.q)) {
                throw ValidationError("q must be a prime power, got " + std::to_string(spec.q));
            }
            break;
        case Family::rpower:
            if (spec.q != 0) {
                throw ValidationError("rpower family does not take q");
            }
            if (spec.r < 1) {
                throw ValidationError("r must be at least 1");
            }
            if (spec.r > 35) {
                throw ValidationError("r must be at most 35");
            }
            break;
    }
}

Integer ground_size(const FamilySpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::boolean: return power(2, static_cast<unsigned long>(spec.n));
        case Family::rpower: return power(spec.r + 1, static_cast<unsigned long>(spec.n));
        case Family::subspace: return galois_number(spec.n, spec.q);
    }
    return 0;
}

std::string family_name(Family family) {
    switch (family) {
        case Family::boolean: return "boolean";
        case Family::subspace: return "subspace";
        case Family::rpower: return "rpower";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "boolean") {
        return Family::boolean;
    }
    if (name == "subspace") {
        return Family::subspace;
    }
    if (name == "rpower") {
        return Family::rpower;
    }
    throw ValidationError("unknown family '" + name + "' (expected boolean, subspace or rpower)");
}

std::string describe(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::boolean: return "P(" + std::to_string(spec.n) + ")";
        case Family::subspace:
            return "V(" + std::to_string(spec.q) + "," + std::to_string(spec.n) + ")";
        case Family::rpower:
            return "{0.." + std::to_string(spec.r) + "}^" + std::to_string(spec.n);
    }
    return "?";
}

nlohmann::json to_json(const FamilySpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    if (spec.family == Family::subspace) {
        j["q"] = spec.q;
    }
    if (spec.family == Family::rpower) {
        j["r"] = spec.r;
    }
    return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n")) {
        throw ValidationError("family spec needs \"family\" and \"n\"");
    }
    try {
        FamilySpec spec;
        spec.family = parse_family(j.at("family").get<std::string>());
        spec.n = j.at("n").get<int>();
        if (j.contains("q") && !j.at("q").is_null()) {
            spec.q = j.at("q").get<int>();
        }
        if (j.contains("r") && !j.at("r").is_null()) {
            spec.r = j.at("r").get<int>();
        }
        validate(spec);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed family spec: ") + e.what());
    }
}

}  // namespace posetsat
