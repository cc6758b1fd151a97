#include "recur/io.hpp"

#include "recur/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace recur {

namespace {

std::vector<std::string> string_array(const nlohmann::json& j, const std::string& key) {
    const auto& node = j.at(key);
    if (!node.is_array())
        raise(Errc::InvalidArgument, "'" + key + "' must be an array of decimal strings");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (item.is_string())
            out.push_back(item.get<std::string>());
        else if (item.is_number_integer())
            out.push_back(std::to_string(item.get<long long>()));
        else
            raise(Errc::InvalidArgument, "'" + key + "' entries must be strings or integers");
    }
    return out;
}

} // namespace

RecurrenceFile parse_recurrence_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::InvalidArgument, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coefficients"))
        raise(Errc::InvalidArgument, "expected an object with a 'coefficients' array");

    RecurrenceFile file;
    for (const std::string& s : string_array(j, "coefficients"))
        file.coefficients.push_back(int_from_string(s));
    if (j.contains("initial")) {
        std::vector<Rat> init;
        for (const std::string& s : string_array(j, "initial"))
            init.push_back(rat_from_string(s));
        file.initial = std::move(init);
    }
    return file;
}

RecurrenceFile read_recurrence_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_recurrence_json(buf.str());
}

std::string render_recurrence_json(const RecurrenceFile& file) {
    nlohmann::json j;
    j["coefficients"] = nlohmann::json::array();
    for (const Int& c : file.coefficients)
        j["coefficients"].push_back(c.get_str());
    if (file.initial) {
        j["initial"] = nlohmann::json::array();
        for (const Rat& a : *file.initial)
            j["initial"].push_back(a.get_str());
    }
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(item);
    if (out.empty())
        raise(Errc::InvalidArgument, "empty list");
    return out;
}

} // namespace

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    for (const std::string& item : split_commas(text))
        out.push_back(rat_from_string(item));
    return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    for (const std::string& item : split_commas(text))
        out.push_back(int_from_string(item));
    return out;
}

std::string render_trace(const ZeroingResult& result, std::size_t k) {
    std::ostringstream out;
    for (const Polynomial& q : result.trace) {
        for (std::size_t i = 0; i < k; ++i) {
            if (i)
                out << '\t';
            out << to_string(q.coefficient(k - 1 - i));
        }
        out << '\n';
    }
    switch (result.termination) {
    case Termination::Terminated:
        out << "terminated t=" << result.steps << '\n';
        break;
    case Termination::WontTerminate:
        out << "non-terminating sign=" << result.sign_q0_at_r << '\n';
        break;
    case Termination::BudgetExhausted:
        out << "budget exhausted t=" << result.steps << '\n';
        break;
    }
    return out.str();
}

} // namespace recur
