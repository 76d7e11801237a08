#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fppcert {

enum class Status { Verified, Refuted, PaperAsserted, Skipped };

const char* to_string(Status s);

/// One certified (or refuted, or merely recorded) statement.
struct Claim {
    std::string id;
    std::string description;
    /// Short label of the mathematical fact the claim checks.
    std::string anchor;
    Status status = Status::Skipped;
    nlohmann::ordered_json statistics = nlohmann::ordered_json::object();
    double elapsed_ms = 0.0;
};

inline Status verified_if(bool ok) { return ok ? Status::Verified : Status::Refuted; }

class CertReport {
public:
    /// Throws InvalidArgument on a duplicate claim id.
    void add(Claim claim);
    void append(const CertReport& other);

    const std::vector<Claim>& claims() const { return claims_; }
    const Claim& find(const std::string& id) const;
    bool contains(const std::string& id) const;

    std::size_t count(Status s) const;
    bool any_refuted() const { return count(Status::Refuted) > 0; }

private:
    std::vector<Claim> claims_;
};

}  // namespace fppcert
