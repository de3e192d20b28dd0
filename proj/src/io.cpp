#include "crcodes/io.hpp"

#include <fstream>
#include <sstream>

#include "crcodes/errors.hpp"
#include "json.hpp"

namespace crc {

using nlohmann::ordered_json;

namespace {

ordered_json rows_json(const Matrix& m) {
    auto out = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        auto r = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(m.at(i, j));
        out.push_back(r);
    }
    return out;
}

std::vector<Word> words_from(const ordered_json& j, int q, int n, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of rows");
    std::vector<Word> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw FormatError(std::string(what) + " rows must be arrays");
        if (n >= 0 && static_cast<int>(row.size()) != n)
            throw FormatError(std::string(what) + " row has length " + std::to_string(row.size()) + ", expected " +
                              std::to_string(n));
        Word w;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw FormatError(std::string(what) + " entries must be integers");
            long long v = e.get<long long>();
            if (v < 0 || v >= q) throw DomainError(std::string(what) + " entry " + std::to_string(v) + " is not in 0.." + std::to_string(q - 1));
            w.push_back(static_cast<Elem>(v));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::string line_info(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string code_to_json(const Code& c) {
    const auto& f = *c.field();
    ordered_json j;
    j["q"] = f.q();
    j["p"] = f.p();
    j["r"] = f.r();
    j["modulus"] = f.modulus();
    j["n"] = c.n();
    if (c.is_linear()) {
        j["kind"] = "linear";
        j["generator"] = rows_json(c.generator());
        j["parity"] = rows_json(c.parity());
    } else {
        j["kind"] = "explicit";
        auto words = ordered_json::array();
        for (const auto& w : c.codewords()) words.push_back(w);
        j["codewords"] = words;
    }
    return j.dump(1);
}

Code code_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("malformed JSON at " + line_info(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    try {
        if (!j.is_object()) throw FormatError("code file must be a JSON object");
        for (const char* key : {"q", "n", "kind"})
            if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
        int q = j.at("q").get<int>();
        int n = j.at("n").get<int>();
        if (n < 1) throw DomainError("length must be positive");
        Field f = gf(q);
        if (j.contains("p") || j.contains("r") || j.contains("modulus")) {
            int p = j.value("p", f->p());
            int r = j.value("r", f->r());
            if (p != f->p() || r != f->r()) throw FormatError("p, r do not match q");
            if (j.contains("modulus")) f = gf_checked(p, r, j.at("modulus").get<std::vector<int>>());
        }
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "linear") {
            if (j.contains("generator")) {
                auto rows = words_from(j.at("generator"), q, n, "generator");
                return Code::from_generator(matrix_from_words(f, n, rows));
            }
            if (j.contains("parity")) {
                auto rows = words_from(j.at("parity"), q, n, "parity");
                return Code::from_parity_check(matrix_from_words(f, n, rows), n);
            }
            throw FormatError("linear code needs 'generator' or 'parity'");
        }
        if (kind == "explicit") {
            if (!j.contains("codewords")) throw FormatError("explicit code needs 'codewords'");
            return Code::from_codewords(f, n, words_from(j.at("codewords"), q, n, "codewords"));
        }
        throw FormatError("kind must be 'linear' or 'explicit'");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad code file: ") + e.what());
    }
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return code_from_json(ss.str());
}

void write_code_file(const std::string& path, const Code& c) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << code_to_json(c) << "\n";
}

}  // namespace crc
