#include <gtest/gtest.h>

#include <random>

#include "betaseq/errors.hpp"
#include "betaseq/serialize.hpp"

using namespace betaseq;

TEST(SeqHandleJson, ExactFormat) {
    EXPECT_EQ(to_json(SeqHandle{Natural(1), Natural(203)}).dump(), R"({"len":"1","w":"203"})");
    EXPECT_EQ(seq_handle_from_json(Json::parse(R"({"len":"2","w":"5544"})")),
              (SeqHandle{Natural(2), Natural(5544)}));
}

TEST(SeqHandleJson, RoundTripsLargeCodes) {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const SeqHandle h{random_bits(rng, 70), random_bits(rng, 4000)};
        EXPECT_EQ(seq_handle_from_json(Json::parse(to_json(h).dump())), h);
    }
}

TEST(SeqHandleJson, RejectsNonDecimalFields) {
    for (const char* bad : {R"({"len":2,"w":"1"})", R"({"len":"2"})", R"({"len":"-1","w":"0"})",
                            R"(["2","5544"])", R"({"len":"2","w":"1.5"})"}) {
        EXPECT_THROW(seq_handle_from_json(Json::parse(bad)), ParseError) << bad;
    }
}

TEST(CertificateJson, RoundTripAndVerify) {
    const std::vector<Certificate> certs{
        i1_inverse(3, Natural(60), Natural(5)),
        star_identity(Natural(2), Natural(5), Natural(1)),
        make_recode_certificate(Natural(68), Natural(6), Natural(60), Natural(9), 2),
    };
    for (const Certificate& c : certs) {
        const Json j = std::visit([](const auto& x) { return to_json(x); }, c);
        const Certificate back = certificate_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back, c);
        EXPECT_TRUE(verify(back));
    }
}

TEST(CertificateJson, StarFieldNames) {
    EXPECT_EQ(to_json(star_identity(Natural(1), Natural(3), Natural(1))).dump(),
              R"({"kind":"star","kprime":"1","i":"3","z":"1","pprime":"5","qprime":"2"})");
}

TEST(CertificateJson, HandAuditedInverseCertificate) {
    // 3 * 5 = 15 = 1 + 7 * 2
    const Json good = Json::parse(R"({"kind":"inverse","k":"1","v":"2","i":"3","u":"3","p":"5","q":"2"})");
    EXPECT_TRUE(verify(certificate_from_json(good)));
    Json wrong_u = good;
    wrong_u["u"] = "6";
    wrong_u["p"] = "5";
    EXPECT_FALSE(verify(certificate_from_json(wrong_u)));
    Json not_divisible = good;
    not_divisible["v"] = "3"; // i - 1 = 2 does not divide 3
    EXPECT_FALSE(verify(certificate_from_json(not_divisible)));
}

TEST(CertificateJson, HugeLevelDoesNotHang) {
    const Json j = Json::parse(
        R"({"kind":"inverse","k":"18446744073709551615","v":"2","i":"18446744073709551616","u":"3","p":"5","q":"2"})");
    EXPECT_FALSE(verify(certificate_from_json(j)));
}

TEST(CertificateJson, Malformed) {
    for (const char* bad : {R"({"kind":"nope"})", R"({"k":"1"})", R"({"kind":"star","kprime":"1"})",
                            R"({"kind":"inverse","k":"99999999999999999999","v":"0","i":"0","u":"1","p":"1","q":"0"})"}) {
        EXPECT_THROW(certificate_from_json(Json::parse(bad)), ParseError) << bad;
    }
}
