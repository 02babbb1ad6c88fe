#pragma once

#include <string>

#include <json.hpp>

#include "qarrow/consensus.hpp"
#include "qarrow/decisive.hpp"
#include "qarrow/lemmas.hpp"

namespace qarrow {

// Reports use ordered JSON so that parse + re-serialize is byte-identical.
using Json = nlohmann::ordered_json;

Json axiom_report_json(const AxiomReport& report, const ProfileSpace& space);
Json decisiveness_report_json(const DecisivenessReport& report, const ProfileSpace& space);
Json chain_report_json(const ChainReport& report, const ProfileSpace& space);
Json lemma_report_json(const LemmaReport& report);
Json flaw_certificate_json(const FlawCertificate& cert);
Json spread_report_json(const SpreadReport& report, const LeafSet& leaves);

std::string axiom_report_text(const AxiomReport& report, const ProfileSpace& space);
std::string decisiveness_report_text(const DecisivenessReport& report, const ProfileSpace& space);
std::string chain_report_text(const ChainReport& report, const ProfileSpace& space);
std::string lemma_report_text(const LemmaReport& report);
std::string flaw_certificate_text(const FlawCertificate& cert);

// dump(2) with a trailing newline; the byte format reports are compared in.
std::string json_to_string(const Json& j);

} // namespace qarrow
