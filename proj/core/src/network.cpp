#include "crn/network.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "crn/errors.hpp"

namespace crn {

Rat Reaction::reactant_coeff(int species) const {
    auto it = reactants.find(species);
    return it == reactants.end() ? Rat(0) : it->second;
}

Rat Reaction::product_coeff(int species) const {
    auto it = products.find(species);
    return it == products.end() ? Rat(0) : it->second;
}

bool operator==(const Reaction& a, const Reaction& b) {
    return a.label == b.label && a.reactants == b.reactants &&
           a.products == b.products;
}

bool operator==(const Network& a, const Network& b) {
    return a.name == b.name && a.species == b.species &&
           a.reactions == b.reactions;
}

std::optional<int> Network::species_index(std::string_view name) const {
    for (int i = 0; i < num_species(); ++i) {
        if (species[i] == name) return i;
    }
    return std::nullopt;
}

std::optional<int> Network::reaction_index(std::string_view label) const {
    for (int j = 0; j < num_reactions(); ++j) {
        if (reactions[j].label == label) return j;
    }
    return std::nullopt;
}

namespace {

enum class Tok { Ident, Int, Plus, Arrow, Colon, Comma, Slash, String, End };

struct Token {
    Tok kind;
    std::string text;
    int col = 0;
};

class LineLexer {
  public:
    LineLexer(std::string_view line, int line_no)
        : line_(line), line_no_(line_no) {
        next();
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, int col) const {
        throw ParseError(msg, line_no_, col);
    }

  private:
    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void next() {
        while (pos_ < line_.size() &&
               (line_[pos_] == ' ' || line_[pos_] == '\t' ||
                line_[pos_] == '\r')) {
            ++pos_;
        }
        tok_ = Token{Tok::End, "", static_cast<int>(pos_) + 1};
        if (pos_ >= line_.size()) return;
        char c = line_[pos_];
        if (ident_start(c)) {
            size_t start = pos_;
            while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
            tok_.kind = Tok::Ident;
            tok_.text = std::string(line_.substr(start, pos_ - start));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < line_.size() &&
                   std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
                ++pos_;
            }
            tok_.kind = Tok::Int;
            tok_.text = std::string(line_.substr(start, pos_ - start));
        } else if (c == '-') {
            if (pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
                tok_.kind = Tok::Arrow;
                pos_ += 2;
            } else if (pos_ + 1 < line_.size() &&
                       std::isdigit(static_cast<unsigned char>(line_[pos_ + 1]))) {
                fail("negative coefficient", tok_.col);
            } else {
                fail("expected '->'", tok_.col);
            }
        } else if (c == '"') {
            size_t end = line_.find('"', pos_ + 1);
            if (end == std::string_view::npos) {
                fail("unterminated string", tok_.col);
            }
            tok_.kind = Tok::String;
            tok_.text = std::string(line_.substr(pos_ + 1, end - pos_ - 1));
            pos_ = end + 1;
        } else if (c == '+') {
            tok_.kind = Tok::Plus;
            ++pos_;
        } else if (c == ':') {
            tok_.kind = Tok::Colon;
            ++pos_;
        } else if (c == ',') {
            tok_.kind = Tok::Comma;
            ++pos_;
        } else if (c == '/') {
            tok_.kind = Tok::Slash;
            ++pos_;
        } else {
            fail(std::string("unexpected character '") + c + "'", tok_.col);
        }
    }

    std::string_view line_;
    int line_no_;
    size_t pos_ = 0;
    Token tok_;
};

struct Builder {
    Network net;
    std::map<std::string, int, std::less<>> species_index;

    int intern(const std::string& name) {
        auto it = species_index.find(name);
        if (it != species_index.end()) return it->second;
        int id = net.num_species();
        net.species.push_back(name);
        species_index.emplace(name, id);
        return id;
    }
};

std::map<int, Rat> parse_side(Builder& b, LineLexer& lx) {
    std::map<int, Rat> side;
    for (;;) {
        Token t = lx.take();
        Rat coeff = 1;
        bool explicit_coeff = false;
        bool had_slash = false;
        int coeff_col = t.col;
        if (t.kind == Tok::Int) {
            explicit_coeff = true;
            coeff = Rat(mpz_class(t.text));
            if (lx.peek().kind == Tok::Slash) {
                had_slash = true;
                lx.take();
                Token den = lx.take();
                if (den.kind != Tok::Int) {
                    lx.fail("expected denominator", den.col);
                }
                mpz_class d(den.text);
                if (d == 0) lx.fail("zero denominator", den.col);
                coeff = Rat(mpz_class(t.text), d);
                coeff.canonicalize();
            }
            if (coeff == 0) {
                // A lone literal "0" is the empty side.
                if (side.empty() && !had_slash &&
                    (lx.peek().kind == Tok::Arrow ||
                     lx.peek().kind == Tok::End)) {
                    return side;
                }
                lx.fail("zero coefficient", coeff_col);
            }
            t = lx.take();
        }
        if (t.kind != Tok::Ident) {
            lx.fail(explicit_coeff ? "expected species name after coefficient"
                                   : "expected species name",
                    t.col);
        }
        side[b.intern(t.text)] += coeff;
        if (lx.peek().kind != Tok::Plus) break;
        lx.take();
    }
    return side;
}

void parse_reaction(Builder& b, LineLexer& lx, const Token& label) {
    Token colon = lx.take();
    if (colon.kind != Tok::Colon) {
        lx.fail("expected ':' after reaction label", colon.col);
    }
    if (b.net.reaction_index(label.text)) {
        lx.fail("duplicate reaction label '" + label.text + "'", label.col);
    }
    Reaction rx;
    rx.label = label.text;
    rx.reactants = parse_side(b, lx);
    Token arrow = lx.take();
    if (arrow.kind != Tok::Arrow) lx.fail("expected '->'", arrow.col);
    rx.products = parse_side(b, lx);
    Token end = lx.take();
    if (end.kind != Tok::End) lx.fail("unexpected trailing input", end.col);
    b.net.reactions.push_back(std::move(rx));
}

void parse_line(Builder& b, LineLexer& lx) {
    Token first = lx.take();
    if (first.kind == Tok::Ident && first.text == "network" &&
        lx.peek().kind == Tok::String) {
        b.net.name = lx.take().text;
        Token end = lx.take();
        if (end.kind != Tok::End) lx.fail("unexpected trailing input", end.col);
        return;
    }
    if (first.kind == Tok::Ident && first.text == "species" &&
        lx.peek().kind == Tok::Ident) {
        for (;;) {
            Token sp = lx.take();
            if (sp.kind != Tok::Ident) lx.fail("expected species name", sp.col);
            b.intern(sp.text);
            if (lx.peek().kind != Tok::Comma) break;
            lx.take();
        }
        Token end = lx.take();
        if (end.kind != Tok::End) lx.fail("unexpected trailing input", end.col);
        return;
    }
    if (first.kind != Tok::Ident && first.kind != Tok::Int) {
        lx.fail("expected reaction label", first.col);
    }
    parse_reaction(b, lx, first);
}

std::string side_string(const Network& net, const std::map<int, Rat>& side) {
    if (side.empty()) return "0";
    std::string out;
    for (const auto& [m, coeff] : side) {
        if (!out.empty()) out += " + ";
        if (coeff != 1) out += to_string(coeff) + " ";
        out += net.species[m];
    }
    return out;
}

}  // namespace

Network parse_network(std::string_view text) {
    Builder b;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        LineLexer lx(line, line_no);
        if (lx.peek().kind == Tok::End) continue;
        parse_line(b, lx);
    }
    if (b.net.reactions.empty()) {
        throw ParseError("network has no reactions", line_no, 1);
    }
    if (b.net.species.empty()) {
        throw ParseError("network has no species", line_no, 1);
    }
    return b.net;
}

Network parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return parse_network(body.str());
}

std::string pretty_print(const Network& net) {
    std::ostringstream out;
    if (!net.name.empty()) out << "network \"" << net.name << "\"\n";
    out << "species ";
    for (int m = 0; m < net.num_species(); ++m) {
        if (m > 0) out << ", ";
        out << net.species[m];
    }
    out << "\n";
    for (const Reaction& rx : net.reactions) {
        out << rx.label << ": " << side_string(net, rx.reactants) << " -> "
            << side_string(net, rx.products) << "\n";
    }
    return out.str();
}

}  // namespace crn
