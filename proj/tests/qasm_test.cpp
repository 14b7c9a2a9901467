// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#include "qadder/qasm.hpp"

#include <gtest/gtest.h>

#include <string>

#include "qadder/adders.hpp"
#include "qadder/circuit.hpp"

using namespace qadder;

namespace {

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        if (text.compare(pos, prefix.size(), prefix) == 0) ++count;
        pos = eol + 1;
    }
    return count;
}

TEST(Qasm, ZeroGateDesignExportsHeaderOnly) {
    std::string text = export_qasm(build(AdderSpec(AdderFamily::AQA1, 2)));
    EXPECT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(text.find("qreg a[2];"), std::string::npos);
    EXPECT_NE(text.find("qreg b[2];"), std::string::npos);
    EXPECT_EQ(count_lines_starting(text, "x "), 0);
    EXPECT_EQ(count_lines_starting(text, "cx "), 0);
    EXPECT_EQ(count_lines_starting(text, "ccx "), 0);
}

TEST(Qasm, Aqa5GateLines) {
    std::string text = export_qasm(build(AdderSpec(AdderFamily::AQA5, 2)));
    EXPECT_EQ(count_lines_starting(text, "cx "), 2);
    EXPECT_EQ(count_lines_starting(text, "ccx "), 1);
    EXPECT_NE(text.find("qreg anc[1];"), std::string::npos);
}

TEST(Qasm, RoundTripIdentityOnGateLists) {
    for (AdderFamily f : {AdderFamily::CQA0, AdderFamily::CQA1, AdderFamily::TPL13,
                          AdderFamily::AQA2, AdderFamily::AQA4, AdderFamily::AQA5}) {
        Circuit c = build(AdderSpec(f, 3));
        Circuit back = import_qasm(export_qasm(c));
        EXPECT_EQ(back.num_qubits(), c.num_qubits()) << family_name(f);
        EXPECT_EQ(back.gates(), c.gates()) << family_name(f);
        EXPECT_EQ(back.roles(), c.roles()) << family_name(f);
    }
}

TEST(Qasm, RoundTripDecomposedCircuit) {
    Circuit c = decompose_toffoli(build(AdderSpec(AdderFamily::TPL13, 2)));
    Circuit back = import_qasm(export_qasm(c));
    EXPECT_EQ(back.gates(), c.gates());
}

TEST(Qasm, ExportReimportTwiceIsStable) {
    std::string once = export_qasm(build(AdderSpec(AdderFamily::CQA1, 4)));
    std::string twice = export_qasm(import_qasm(once));
    EXPECT_EQ(once, twice);
}

TEST(Qasm, ParseErrorsCarryLineNumbers) {
    EXPECT_THROW(import_qasm("qreg a[2];\n"), QasmParseError);  // missing version
    try {
        import_qasm("OPENQASM 2.0;\nqreg a[2];\ncy a[0],a[1];\n");
        FAIL() << "expected parse error";
    } catch (const QasmParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg a[2];\ncx a[0],a[5];\n"), QasmParseError);
    EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg a[2];\ncx a[0] a[1]\n"), QasmParseError);
    EXPECT_THROW(import_qasm("OPENQASM 3.0;\nqreg a[2];\n"), QasmParseError);
    EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg a[2];\nqreg a[3];\n"), QasmParseError);
}

TEST(Qasm, GenericLayoutFallsBackToSingleRegister) {
    Roles r;
    r.a = {2, 3};  // not at the base of the index space
    r.sum = {0};
    Circuit c(4, r);
    c.append(GateOp::cnot(2, 0));
    std::string text = export_qasm(c);
    EXPECT_NE(text.find("qreg q[4];"), std::string::npos);
    Circuit back = import_qasm(text);
    EXPECT_EQ(back.gates(), c.gates());
    EXPECT_EQ(back.roles(), c.roles());
}

}  // namespace
