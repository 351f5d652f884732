#include "qaw/report.hpp"

#include <sstream>

namespace qaw {

namespace {

const char* status(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

Record to_record(const StructureReport& report) {
    Record r;
    r["check"] = report.check;
    r["n"] = report.n;
    r["status"] = status(report.pass);
    r["bandwidth_r"] = report.bandwidth.r;
    r["bandwidth_s"] = report.bandwidth.s;
    r["relation_empty"] = report.bandwidth.empty;
    r["residual_count"] = report.residuals.size();
    if (!report.residuals.empty()) {
        Record residuals = Record::array();
        for (const auto& [offset, value] : report.residuals) {
            residuals.push_back({{"offset", offset}, {"value", value.to_string()}});
        }
        r["residuals"] = std::move(residuals);
    }
    return r;
}

Record to_record(const BandwidthSummary& summary) {
    Record r;
    r["check"] = "bandwidth";
    r["nmax"] = summary.nmax;
    r["status"] = status(summary.pass);
    r["max_r"] = summary.max_r;
    r["max_s"] = summary.max_s;
    r["offset_minus2_nonzero"] = summary.offset_minus2_nonzero;
    return r;
}

Record to_record(const IdentityCertificate& cert, const std::string& check) {
    Record r;
    r["check"] = check;
    r["name"] = cert.name;
    r["status"] = status(cert.zero());
    r["verdict"] = cert.zero() ? "zero" : "nonzero";
    r["residual_text"] = cert.rendering();
    r["denominator_free"] = cert.denominator_free();
    if (!cert.note.empty()) {
        r["note"] = cert.note;
    }
    return r;
}

Record to_record(const NumericSummary& summary) {
    Record r;
    r["check"] = "numeric";
    r["nmax"] = summary.nmax;
    r["status"] = status(summary.pass);
    r["grid"] = summary.grid;
    r["max_rel_dev"] = summary.max_rel_dev;
    r["max_operator_dev"] = summary.max_operator_dev;
    return r;
}

std::string render_record(const Record& record, Format format) {
    if (format == Format::json) {
        return record.dump();
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
        os << (first ? "" : " ") << key << "=";
        first = false;
        if (value.is_string()) {
            const auto& s = value.get_ref<const std::string&>();
            if (s.find(' ') != std::string::npos) {
                os << value.dump();
            } else {
                os << s;
            }
        } else {
            os << value.dump();
        }
    }
    return os.str();
}

bool record_passes(const Record& record) {
    return record.contains("status") && record["status"] == "pass";
}

}  // namespace qaw
