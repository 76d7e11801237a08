#include "fppcert/report.hpp"

#include <algorithm>

#include "fppcert/error.hpp"

namespace fppcert {

const char* to_string(Status s)
{
    switch (s) {
    case Status::Verified: return "VERIFIED";
    case Status::Refuted: return "REFUTED";
    case Status::PaperAsserted: return "PAPER-ASSERTED";
    case Status::Skipped: return "SKIPPED";
    }
    return "SKIPPED";
}

void CertReport::add(Claim claim)
{
    if (contains(claim.id))
        throw Error(ErrorCode::InvalidArgument, "duplicate claim id " + claim.id);
    claims_.push_back(std::move(claim));
}

void CertReport::append(const CertReport& other)
{
    for (const auto& c : other.claims_)
        add(c);
}

bool CertReport::contains(const std::string& id) const
{
    return std::any_of(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.id == id; });
}

const Claim& CertReport::find(const std::string& id) const
{
    auto it = std::find_if(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.id == id; });
    if (it == claims_.end())
        throw Error(ErrorCode::InvalidArgument, "no claim " + id);
    return *it;
}

std::size_t CertReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.status == s; }));
}

}  // namespace fppcert
