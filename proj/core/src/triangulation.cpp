#include "pachner/triangulation.hpp"

#include <cctype>
#include <sstream>

namespace pachner {

Triangulation::Triangulation(int tet_count) {
    if (tet_count < 1) throw std::invalid_argument("Triangulation: need at least one tetrahedron");
    glu_.resize(tet_count);
}

int Triangulation::boundary_face_count() const {
    int n = 0;
    for (const auto& tet : glu_)
        for (const auto& g : tet)
            if (!g.glued()) ++n;
    return n;
}

void Triangulation::check_slot(int tet, int face) const {
    if (tet < 0 || tet >= size()) throw std::out_of_range("Triangulation: tet index out of range");
    if (face < 0 || face > 3) throw std::out_of_range("Triangulation: face index out of range");
}

void Triangulation::glue(int i, int f, int j, const Perm4& sigma) {
    check_slot(i, f);
    check_slot(j, 0);
    const int g = sigma[f];
    if (i == j && f == g) throw std::logic_error("Triangulation: face glued to itself");
    if (glu_[i][f].glued() || glu_[j][g].glued())
        throw std::logic_error("Triangulation: face slot already glued");
    glu_[i][f] = Gluing{j, sigma};
    glu_[j][g] = Gluing{i, sigma.inverse()};
}

void Triangulation::unglue(int i, int f) {
    check_slot(i, f);
    if (!glu_[i][f].glued()) return;
    const Gluing g = glu_[i][f];
    glu_[g.tet][g.perm[f]] = Gluing{};
    glu_[i][f] = Gluing{};
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space_and_comments(bool stop_at_newline) {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == '\n') {
                if (stop_at_newline) return;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    // Reads a whitespace/comment-delimited token on the current line.
    std::string token(int& tline, int& tcol) {
        skip_space_and_comments(true);
        tline = line;
        tcol = col;
        std::string t;
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#') break;
            t.push_back(c);
            advance();
        }
        return t;
    }
};

int parse_int(const std::string& s, const char* what, int line, int col) {
    if (s.empty()) throw ParseError(std::string("expected ") + what, line, col);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("malformed ") + what + " '" + s + "'", line, col);
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + " out of range '" + s + "'", line, col);
    }
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
    Cursor cur{text};

    int l, c;
    std::string kw = cur.token(l, c);
    while (kw.empty() && !cur.eof()) {
        cur.skip_space_and_comments(false);
        kw = cur.token(l, c);
    }
    if (kw != "tri") throw ParseError("expected 'tri' header", l, c);
    std::string tstr = cur.token(l, c);
    const int t = parse_int(tstr, "tetrahedron count", l, c);
    if (t < 1) throw ParseError("tetrahedron count must be at least 1", l, c);

    Triangulation tri(t);
    // Remember where each slot's entry came from for involution errors.
    std::vector<std::array<std::pair<int, int>, 4>> where(t);
    std::vector<std::array<Gluing, 4>> slots(t);

    for (int i = 0; i < t; ++i) {
        cur.skip_space_and_comments(false);
        std::string label = cur.token(l, c);
        if (label != std::to_string(i) + ":")
            throw ParseError("expected '" + std::to_string(i) + ":'", l, c);
        for (int f = 0; f < 4; ++f) {
            std::string entry = cur.token(l, c);
            if (entry.empty()) throw ParseError("expected gluing entry", l, c);
            where[i][f] = {l, c};
            if (entry == "bdry") continue;
            auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw ParseError("malformed gluing entry '" + entry + "'", l, c);
            int j = parse_int(entry.substr(0, colon), "tetrahedron index", l, c);
            if (j >= t) throw ParseError("tetrahedron index out of range '" + entry + "'", l, c);
            Perm4 sigma;
            try {
                sigma = Perm4::from_digits(entry.substr(colon + 1));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string(e.what()) + " in '" + entry + "'", l, c);
            }
            if (j == i && sigma[f] == f)
                throw ParseError("face glued to itself", l, c);
            slots[i][f] = Gluing{j, sigma};
        }
    }
    cur.skip_space_and_comments(false);
    if (!cur.eof()) throw ParseError("trailing content after gluing table", cur.line, cur.col);

    // Cross-check the involution, then install through glue() so every
    // internal invariant holds by construction.
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = slots[i][f];
            if (!g.glued()) continue;
            const int j = g.tet, gf = g.perm[f];
            const Gluing& back = slots[j][gf];
            auto [el, ec] = where[i][f];
            if (!back.glued() || back.tet != i || back.perm != g.perm.inverse() ||
                back.perm[gf] != f)
                throw ParseError("involution violation at tet " + std::to_string(i) + " face " +
                                     std::to_string(f),
                                 el, ec);
            if (i < j || (i == j && f < gf)) tri.glue(i, f, j, g.perm);
        }
    return tri;
}

std::string serialize(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri " << tri.size() << '\n';
    for (int i = 0; i < tri.size(); ++i) {
        out << i << ':';
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            if (g.glued())
                out << ' ' << g.tet << ':' << g.perm.digits();
            else
                out << " bdry";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pachner
