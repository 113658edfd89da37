#include "degcorr/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "degcorr/error.hpp"

namespace degcorr {

using ordered_json = nlohmann::ordered_json;

std::optional<GridFormat> parse_format(std::string_view text) {
    if (text == "json") return GridFormat::json;
    if (text == "csv") return GridFormat::csv;
    return std::nullopt;
}

std::string_view extension(GridFormat format) { return format == GridFormat::json ? ".json" : ".csv"; }

GridDocument to_document(const JointDegreeMatrix& mat) {
    GridDocument doc;
    doc.kind = "simulated";
    doc.m = mat.m;
    doc.entries = mat.probabilities;
    doc.edge_count = mat.edge_count;
    doc.replicas = mat.replicas_merged;
    return doc;
}

GridDocument to_document(const StationaryGrid& grid) {
    GridDocument doc;
    doc.kind = "stationary";
    doc.m = grid.m;
    doc.entries = grid.entries;
    doc.tail_mass = grid.tail_mass;
    return doc;
}

GridDocument to_document(const EdgeStateDistribution& dist) {
    GridDocument doc;
    doc.kind = "transient";
    doc.m = dist.m;
    doc.entries = dist.entries;
    doc.tail_mass = dist.tail_mass;
    doc.edge_count = static_cast<std::uint64_t>(dist.current_edges());
    doc.t = dist.t;
    return doc;
}

StationaryGrid to_stationary(const GridDocument& doc) { return StationaryGrid{doc.m, doc.entries, doc.tail_mass}; }

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

namespace {

int csv_first_degree(const GridDocument& doc) {
    const auto lo = doc.entries.min_degree_present();
    return std::clamp(lo ? std::min(*lo, doc.m) : doc.m, 0, doc.max_k());
}

std::string render_json(const GridDocument& doc) {
    // one cell per line keeps large grids diff-able
    std::ostringstream out;
    out << "{\n";
    out << "  \"kind\": " << ordered_json(doc.kind).dump() << ",\n";
    out << "  \"mode\": \"" << to_string(doc.mode()) << "\",\n";
    out << "  \"m\": " << doc.m << ",\n";
    out << "  \"max_k\": " << doc.max_k() << ",\n";
    out << "  \"tail_mass\": " << format_double(doc.tail_mass) << ",\n";
    if (doc.edge_count) out << "  \"edge_count\": " << *doc.edge_count << ",\n";
    if (doc.replicas) out << "  \"replicas\": " << *doc.replicas << ",\n";
    if (doc.t) out << "  \"t\": " << *doc.t << ",\n";
    out << "  \"entries\": [";
    bool first = true;
    for (int k1 = 0; k1 <= doc.max_k(); ++k1)
        for (int k2 = 0; k2 <= doc.max_k(); ++k2) {
            const double p = doc.entries(k1, k2);
            if (p == 0.0) continue;
            out << (first ? "\n" : ",\n") << "    [" << k1 << ", " << k2 << ", " << format_double(p) << "]";
            first = false;
        }
    out << (first ? "]\n" : "\n  ]\n") << "}\n";
    return out.str();
}

std::string render_csv(const GridDocument& doc) {
    std::ostringstream out;
    out << "# kind=" << doc.kind << " mode=" << to_string(doc.mode()) << " m=" << doc.m << " max_k=" << doc.max_k()
        << " tail_mass=" << format_double(doc.tail_mass);
    if (doc.edge_count) out << " edge_count=" << *doc.edge_count;
    if (doc.replicas) out << " replicas=" << *doc.replicas;
    if (doc.t) out << " t=" << *doc.t;
    out << '\n';
    const int lo = csv_first_degree(doc);
    out << "k1\\k2";
    for (int k2 = lo; k2 <= doc.max_k(); ++k2) out << ',' << k2;
    out << '\n';
    for (int k1 = lo; k1 <= doc.max_k(); ++k1) {
        out << k1;
        for (int k2 = lo; k2 <= doc.max_k(); ++k2) out << ',' << format_double(doc.entries(k1, k2));
        out << '\n';
    }
    return out.str();
}

[[noreturn]] void csv_error(std::size_t line, std::size_t column, const std::string& what) {
    fail(ErrorKind::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

template <class T>
T parse_number(std::string_view field, std::size_t line, std::size_t column) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        csv_error(line, column, "malformed number '" + std::string(field) + "'");
    return value;
}

struct Field {
    std::string_view text;
    std::size_t column;
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
        fields.push_back({line.substr(start, stop - start), start + 1});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

GridDocument parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view line = text.substr(start, stop - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = stop + 1;
    }
    if (lines.empty() || lines[0].empty() || lines[0].front() != '#') csv_error(1, 1, "missing '# key=value' metadata line");

    GridDocument doc;
    std::optional<Mode> mode;
    std::optional<int> max_k;
    {
        std::string_view meta = lines[0].substr(1);
        std::size_t pos = 0;
        while (pos < meta.size()) {
            while (pos < meta.size() && meta[pos] == ' ') ++pos;
            if (pos >= meta.size()) break;
            std::size_t end = meta.find(' ', pos);
            if (end == std::string_view::npos) end = meta.size();
            const std::string_view token = meta.substr(pos, end - pos);
            const std::size_t column = pos + 2;
            const std::size_t eq = token.find('=');
            if (eq == std::string_view::npos) csv_error(1, column, "expected key=value");
            const std::string_view key = token.substr(0, eq);
            const std::string_view value = token.substr(eq + 1);
            if (key == "kind") doc.kind = std::string(value);
            else if (key == "mode") {
                mode = parse_mode(value);
                if (!mode) csv_error(1, column, "unknown mode '" + std::string(value) + "'");
            } else if (key == "m") doc.m = parse_number<int>(value, 1, column);
            else if (key == "max_k") max_k = parse_number<int>(value, 1, column);
            else if (key == "tail_mass") doc.tail_mass = parse_number<double>(value, 1, column);
            else if (key == "edge_count") doc.edge_count = parse_number<std::uint64_t>(value, 1, column);
            else if (key == "replicas") doc.replicas = parse_number<int>(value, 1, column);
            else if (key == "t") doc.t = parse_number<std::int64_t>(value, 1, column);
            pos = end;
        }
    }
    if (!mode || !max_k) csv_error(1, 1, "metadata must name mode and max_k");
    if (*max_k < 0) csv_error(1, 1, "max_k must be non-negative");
    doc.entries = DegreeMatrix(*mode, *max_k);

    if (lines.size() < 2) csv_error(2, 1, "missing header row");
    const auto header = split_fields(lines[1]);
    std::vector<int> columns;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const int k2 = parse_number<int>(header[i].text, 2, header[i].column);
        if (k2 < 0 || k2 > *max_k) csv_error(2, header[i].column, "column degree outside [0, max_k]");
        columns.push_back(k2);
    }
    for (std::size_t ln = 2; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        const auto fields = split_fields(lines[ln]);
        if (fields.size() != header.size())
            csv_error(ln + 1, 1, "expected " + std::to_string(header.size()) + " fields, found " +
                                     std::to_string(fields.size()));
        const int k1 = parse_number<int>(fields[0].text, ln + 1, 1);
        if (k1 < 0 || k1 > *max_k) csv_error(ln + 1, 1, "row degree outside [0, max_k]");
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const double p = parse_number<double>(fields[i].text, ln + 1, fields[i].column);
            const int k2 = columns[i - 1];
            if (p != 0.0 && *mode == Mode::undirected && k1 > k2)
                csv_error(ln + 1, fields[i].column, "undirected grid has mass below the diagonal");
            doc.entries(k1, k2) = p;
        }
    }
    return doc;
}

GridDocument parse_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse_error, e.what());
    }
    try {
        GridDocument doc;
        doc.kind = j.at("kind").get<std::string>();
        const auto mode = parse_mode(j.at("mode").get<std::string>());
        require(mode.has_value(), ErrorKind::parse_error, "unknown mode in grid file");
        doc.m = j.at("m").get<int>();
        const int max_k = j.at("max_k").get<int>();
        require(max_k >= 0, ErrorKind::parse_error, "max_k must be non-negative");
        doc.tail_mass = j.at("tail_mass").get<double>();
        if (j.contains("edge_count")) doc.edge_count = j["edge_count"].get<std::uint64_t>();
        if (j.contains("replicas")) doc.replicas = j["replicas"].get<int>();
        if (j.contains("t")) doc.t = j["t"].get<std::int64_t>();
        doc.entries = DegreeMatrix(*mode, max_k);
        std::size_t index = 0;
        for (const auto& cell : j.at("entries")) {
            const int k1 = cell.at(0).get<int>();
            const int k2 = cell.at(1).get<int>();
            require(k1 >= 0 && k2 >= 0 && k1 <= max_k && k2 <= max_k, ErrorKind::parse_error,
                    "entries[" + std::to_string(index) + "] lies outside [0, max_k]");
            doc.entries(k1, k2) = cell.at(2).get<double>();
            ++index;
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse_error, std::string("grid file: ") + e.what());
    }
}

}  // namespace

std::string render_grid(const GridDocument& doc, GridFormat format) {
    return format == GridFormat::json ? render_json(doc) : render_csv(doc);
}

GridDocument parse_grid(std::string_view text, GridFormat format) {
    return format == GridFormat::json ? parse_json(text) : parse_csv(text);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io_error, "cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorKind::io_error, "failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io_error, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_grid(const std::filesystem::path& path, const GridDocument& doc, GridFormat format) {
    write_text(path, render_grid(doc, format));
}

GridDocument read_grid(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    const auto format = parse_format(ext.empty() ? std::string_view{} : std::string_view(ext).substr(1));
    require(format.has_value(), ErrorKind::usage, "grid file must end in .json or .csv: " + path.string());
    return parse_grid(read_text(path), *format);
}

}  // namespace degcorr
