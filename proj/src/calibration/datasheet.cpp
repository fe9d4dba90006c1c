#include <fstream>
#include <sstream>
#include <string>

#include "../util/csv.hpp"
#include "rbvision/calibration.hpp"
#include "rbvision/error.hpp"

namespace rbvision {
namespace {

struct Layout {
    DatasheetKind kind;
    std::size_t columns;
};

Layout layout_for_header(std::string_view header_line) {
    std::string header;
    for (const auto cell : csv::split(header_line)) {
        if (!header.empty()) header += ',';
        header += cell;
    }
    if (header == "d_v_cm,L_px") return {DatasheetKind::Vertical, 2};
    if (header == "d_h_cm,d_h_px") return {DatasheetKind::Horizontal, 2};
    if (header == "d_v_cm,d_h_cm,d_h_px") return {DatasheetKind::HorizontalWithDepth, 3};
    if (header == kManifestHeader) return {DatasheetKind::Manifest, 7};
    if (header.empty()) fail(ErrorKind::Format, "datasheet has no header row");
    fail(ErrorKind::Format, "unknown datasheet header '" + header + "'");
}

}  // namespace

Datasheet parse_datasheet(std::string_view text) {
    const auto rows = csv::lines(text);
    if (rows.empty()) fail(ErrorKind::Format, "datasheet is empty (no header row)");
    const Layout layout = layout_for_header(rows.front());

    Datasheet sheet;
    sheet.kind = layout.kind;
    std::string rejected;
    auto reject = [&](std::size_t line) {
        if (!rejected.empty()) rejected += ", ";
        rejected += std::to_string(line);
    };

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::size_t line = i + 1;
        if (rows[i].find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto cells = csv::split(rows[i]);
        if (cells.size() != layout.columns) {
            fail(ErrorKind::Parse, "row " + std::to_string(line) + ": expected " +
                                       std::to_string(layout.columns) + " cells, got " +
                                       std::to_string(cells.size()));
        }
        auto num = [&](std::size_t col) { return csv::parse_number(cells[col], line, col + 1); };

        switch (layout.kind) {
            case DatasheetKind::Vertical: {
                const VerticalSample s{num(0), num(1)};
                if (!(s.d_v_cm > 0.0 && s.L_px > 0.0)) {
                    reject(line);
                    break;
                }
                sheet.vertical.push_back(s);
                break;
            }
            case DatasheetKind::Horizontal:
                sheet.horizontal.push_back({num(0), num(1), std::nullopt});
                break;
            case DatasheetKind::HorizontalWithDepth: {
                const double d_v = num(0);
                if (!(d_v > 0.0)) {
                    reject(line);
                    break;
                }
                sheet.horizontal.push_back({num(1), num(2), d_v});
                break;
            }
            case DatasheetKind::Manifest: {
                ManifestRow row{std::string(cells[0]), num(1), num(2), num(3),
                                num(4), num(5), num(6)};
                if (row.filename.empty() || !(row.d_v_cm > 0.0 && row.L_px > 0.0)) {
                    reject(line);
                    break;
                }
                sheet.vertical.push_back({row.d_v_cm, row.L_px});
                sheet.horizontal.push_back({row.d_h_cm, row.d_h_px, row.d_v_cm});
                sheet.manifest.push_back(std::move(row));
                break;
            }
        }
    }
    if (!rejected.empty()) {
        fail(ErrorKind::Validation, "rows violating sample invariants: " + rejected);
    }
    return sheet;
}

Datasheet load_datasheet(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open datasheet '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_datasheet(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " in '" + path.string() + "'");
    }
}

}  // namespace rbvision
