#pragma once

// JSON forms. Every Natural crosses the boundary as a decimal string.

#include <variant>

#include "betaseq/codec.hpp"
#include "betaseq/models.hpp"
#include "betaseq/witness.hpp"

namespace betaseq {

/// {"len": "<decimal>", "w": "<decimal>"}
Json to_json(const SeqHandle& h);
SeqHandle seq_handle_from_json(const Json& j);

Json to_json(std::span<const Natural> xs);

/// Certificates carry a "kind" tag: "inverse", "star" or "recode".
Json to_json(const InverseCertificate& c);
Json to_json(const StarWitness& w);
Json to_json(const RecodeCertificate& c);

using Certificate = std::variant<InverseCertificate, StarWitness, RecodeCertificate>;

/// Throws ParseError on an unknown kind, missing field or non-decimal value.
Certificate certificate_from_json(const Json& j);

bool verify(const Certificate& c);

} // namespace betaseq
