#include "polyideal/cli/gridtext.hpp"

#include <vector>

#include "polyideal/error.hpp"

namespace polyideal::cli {

Polyomino parse_grid(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::vector<Point> cells;
    const int rows = static_cast<int>(lines.size());
    for (int r = 0; r < rows; ++r) {
        for (std::size_t col = 0; col < lines[r].size(); ++col) {
            const char ch = lines[r][col];
            if (ch == '#') cells.push_back({static_cast<int>(col), rows - 1 - r});
            else if (ch != '.')
                throw Error(ErrorCode::BadCharacter, "unexpected character '" + std::string(1, ch) + "' at line " +
                                                         std::to_string(r + 1) + ", column " + std::to_string(col + 1));
        }
    }
    return Polyomino::from_cells(cells);
}

std::string render_grid(const Polyomino& p) {
    std::string out;
    for (int j = p.height() - 1; j >= 0; --j) {
        for (int i = 0; i < p.width(); ++i) out += p.contains_cell({i, j}) ? '#' : '.';
        if (j > 0) out += '\n';
    }
    return out;
}

}  // namespace polyideal::cli
