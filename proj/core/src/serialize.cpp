#include "betaseq/serialize.hpp"

#include "betaseq/errors.hpp"

namespace betaseq {

namespace {

Natural field(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    const Json& value = j.at(key);
    if (!value.is_string()) {
        throw ParseError(std::string("field \"") + key + "\" must be a decimal string");
    }
    return Natural::from_decimal(value.get<std::string>());
}

std::uint64_t small_field(const Json& j, const char* key) {
    auto n = field(j, key).to_u64();
    if (!n) {
        throw ParseError(std::string("field \"") + key + "\" exceeds 64 bits");
    }
    return *n;
}

} // namespace

Json to_json(const SeqHandle& h) {
    Json j;
    j["len"] = h.len.to_string();
    j["w"] = h.w.to_string();
    return j;
}

SeqHandle seq_handle_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("sequence handle must be a JSON object");
    }
    return SeqHandle{field(j, "len"), field(j, "w")};
}

Json to_json(std::span<const Natural> xs) {
    Json arr = Json::array();
    for (const Natural& x : xs) {
        arr.push_back(x.to_string());
    }
    return arr;
}

Json to_json(const InverseCertificate& c) {
    Json j;
    j["kind"] = "inverse";
    j["k"] = std::to_string(c.k);
    j["v"] = c.v.to_string();
    j["i"] = c.i.to_string();
    j["u"] = c.u.to_string();
    j["p"] = c.p.to_string();
    j["q"] = c.q.to_string();
    return j;
}

Json to_json(const StarWitness& w) {
    Json j;
    j["kind"] = "star";
    j["kprime"] = w.kprime.to_string();
    j["i"] = w.i.to_string();
    j["z"] = w.z.to_string();
    j["pprime"] = w.pprime.to_string();
    j["qprime"] = w.qprime.to_string();
    return j;
}

Json to_json(const RecodeCertificate& c) {
    Json j;
    j["kind"] = "recode";
    j["k"] = std::to_string(c.k);
    j["u"] = c.u.to_string();
    j["v"] = c.v.to_string();
    j["vprime"] = c.vprime.to_string();
    j["x"] = c.x.to_string();
    j["uprime"] = c.uprime.to_string();
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ParseError("certificate must be an object with a string \"kind\"");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "inverse") {
        return InverseCertificate{small_field(j, "k"), field(j, "v"), field(j, "i"),
                                  field(j, "u"),       field(j, "p"), field(j, "q")};
    }
    if (kind == "star") {
        return StarWitness{field(j, "kprime"), field(j, "i"), field(j, "z"), field(j, "pprime"),
                           field(j, "qprime")};
    }
    if (kind == "recode") {
        return RecodeCertificate{small_field(j, "k"), field(j, "u"), field(j, "v"),
                                 field(j, "vprime"),  field(j, "x"), field(j, "uprime")};
    }
    throw ParseError("unknown certificate kind \"" + kind + "\"");
}

bool verify(const Certificate& c) {
    return std::visit([](const auto& cert) { return cert.verify(); }, c);
}

} // namespace betaseq
