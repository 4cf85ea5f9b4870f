#include <matchdeg/profile.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace matchdeg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    return std::string(text.substr(begin, end - begin));
}

}  // namespace

OwnerId::OwnerId(std::string id) : id_(trim(id)) {
    if (id_.empty())
        throw std::invalid_argument("owner id must be non-empty");
}

NumericRange::NumericRange() noexcept : lower_(0.0), upper_(0.0), empty_(true) {}

NumericRange::NumericRange(double lower, double upper, bool empty) noexcept
    : lower_(lower), upper_(upper), empty_(empty) {}

NumericRange NumericRange::closed(double lower, double upper) {
    if (std::isnan(lower) || std::isnan(upper))
        throw std::invalid_argument("range endpoint must not be NaN");
    if (lower > upper)
        throw std::invalid_argument("range lower endpoint exceeds upper");
    return NumericRange(lower, upper, false);
}

NumericRange NumericRange::singleton(double value) { return closed(value, value); }

NumericRange NumericRange::at_least(double lower) { return closed(lower, kInf); }

NumericRange NumericRange::at_most(double upper) { return closed(-kInf, upper); }

NumericRange NumericRange::all() { return closed(-kInf, kInf); }

NumericRange NumericRange::empty() noexcept { return NumericRange(); }

double NumericRange::lower() const {
    if (empty_) throw std::logic_error("empty range has no endpoints");
    return lower_;
}

double NumericRange::upper() const {
    if (empty_) throw std::logic_error("empty range has no endpoints");
    return upper_;
}

bool NumericRange::contains(double x) const noexcept {
    return !empty_ && lower_ <= x && x <= upper_;
}

namespace {

std::set<std::string> checked_values(std::set<std::string> values) {
    for (const std::string& value : values)
        if (value.empty())
            throw std::invalid_argument("discrete value must be non-empty");
    return values;
}

}  // namespace

DiscreteSet::DiscreteSet(std::initializer_list<std::string> values)
    : values_(checked_values(std::set<std::string>(values))) {}

DiscreteSet::DiscreteSet(std::vector<std::string> values)
    : values_(checked_values(std::set<std::string>(
          std::make_move_iterator(values.begin()),
          std::make_move_iterator(values.end())))) {}

DiscreteSet::DiscreteSet(std::set<std::string> values)
    : values_(checked_values(std::move(values))) {}

bool DiscreteSet::contains(const std::string& value) const {
    return values_.count(value) != 0;
}

std::optional<std::string> DiscreteSet::single_value() const {
    if (values_.size() != 1) return std::nullopt;
    return *values_.begin();
}

InterestLevel::InterestLevel(double level) : level_(level) {
    if (!(level >= -1.0 && level <= 1.0))
        throw std::invalid_argument("interest level must be within [-1, 1]");
}

std::string to_string(Role role) {
    return role == Role::search ? "search" : "advertising";
}

std::optional<Role> role_from_string(std::string_view text) {
    if (text == "search") return Role::search;
    if (text == "advertising") return Role::advertising;
    return std::nullopt;
}

namespace {

void check_name(const std::string& section, const std::string& name,
                std::vector<ValidationIssue>& issues) {
    const std::string trimmed = trim(name);
    if (trimmed.empty())
        issues.push_back({section + "." + name, "item name must be non-empty"});
    else if (trimmed != name)
        issues.push_back({section + "." + name,
                          "item name must not have surrounding whitespace"});
}

}  // namespace

ValidationReport validate_profile(const Profile& profile, std::optional<Role> role) {
    ValidationReport report;

    for (const auto& [name, range] : profile.numeric) {
        (void)range;
        check_name("numeric", name, report.issues);
    }
    for (const auto& [name, set] : profile.discrete) {
        (void)set;
        check_name("discrete", name, report.issues);
        if (profile.numeric.count(name))
            report.issues.push_back(
                {"discrete." + name, "item name also appears in numeric"});
    }
    for (const auto& [name, level] : profile.interests) {
        (void)level;
        check_name("interests", name, report.issues);
        if (profile.numeric.count(name))
            report.issues.push_back(
                {"interests." + name, "item name also appears in numeric"});
        if (profile.discrete.count(name))
            report.issues.push_back(
                {"interests." + name, "item name also appears in discrete"});
    }

    if (role == Role::advertising) {
        for (const auto& [name, set] : profile.discrete)
            if (set.size() > 1)
                report.issues.push_back(
                    {"discrete." + name,
                     "advertised discrete attribute must be a single value"});
    }

    return report;
}

namespace {

std::string validation_message(const ValidationReport& report) {
    if (report.ok()) return "validation failed";
    const ValidationIssue& first = report.issues.front();
    std::string message = "validation failed: ";
    if (!first.path.empty()) message += first.path + ": ";
    message += first.message;
    if (report.issues.size() > 1)
        message += " (and " + std::to_string(report.issues.size() - 1) + " more)";
    return message;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(validation_message(report)), report_(std::move(report)) {}

StencilParseError::StencilParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at offset " + std::to_string(position)),
      position_(position) {}

namespace {

struct StencilScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    }

    bool at_end() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw StencilParseError(message, pos);
    }

    double number() {
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected a number");
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    void expect_end(const char* what) {
        skip_space();
        if (!at_end()) fail(std::string("unexpected input after ") + what);
    }
};

NumericRange checked_range(double lower, double upper, std::size_t at) {
    try {
        return NumericRange::closed(lower, upper);
    } catch (const std::invalid_argument& e) {
        throw StencilParseError(e.what(), at);
    }
}

}  // namespace

StencilItem parse_stencil_shorthand(std::string_view text) {
    StencilScanner s{text};
    s.skip_space();

    const std::size_t name_begin = s.pos;
    while (!s.at_end() && !is_space(s.peek()) &&
           std::string_view("=<>[]{}").find(s.peek()) == std::string_view::npos)
        ++s.pos;
    std::string name(text.substr(name_begin, s.pos - name_begin));
    if (name.empty()) s.fail("expected an attribute name");

    s.skip_space();
    if (s.at_end()) s.fail("expected an operator");

    enum class Op { eq, ge, le, in } op;
    if (s.peek() == '=') {
        op = Op::eq;
        ++s.pos;
    } else if (s.peek() == '>') {
        op = Op::ge;
        ++s.pos;
        if (!s.at_end() && s.peek() == '=') ++s.pos;
    } else if (s.peek() == '<') {
        op = Op::le;
        ++s.pos;
        if (!s.at_end() && s.peek() == '=') ++s.pos;
    } else if (text.substr(s.pos, 2) == "in" &&
               (s.pos + 2 == text.size() || is_space(text[s.pos + 2]) ||
                text[s.pos + 2] == '[' || text[s.pos + 2] == '{')) {
        op = Op::in;
        s.pos += 2;
    } else {
        s.fail("expected one of '=', '>', '>=', '<', '<=', 'in'");
    }

    s.skip_space();

    if (op == Op::ge || op == Op::le) {
        const std::size_t at = s.pos;
        if (s.at_end()) s.fail("expected a number");
        const double value = s.number();
        s.expect_end("the number");
        return {std::move(name),
                op == Op::ge ? checked_range(value, std::numeric_limits<double>::infinity(), at)
                             : checked_range(-std::numeric_limits<double>::infinity(), value, at)};
    }

    if (op == Op::eq) {
        if (s.at_end()) s.fail("expected a value");
        const std::string value = trim(text.substr(s.pos));
        const std::size_t at = s.pos;
        // Numeric only when the whole remainder is one number.
        StencilScanner probe{text, s.pos};
        double number = 0.0;
        bool numeric = false;
        try {
            number = probe.number();
            probe.skip_space();
            numeric = probe.at_end();
        } catch (const StencilParseError&) {
            numeric = false;
        }
        if (numeric) return {std::move(name), checked_range(number, number, at)};
        return {std::move(name), DiscreteSet{value}};
    }

    // op == Op::in
    if (s.at_end()) s.fail("expected '[' or '{'");
    if (s.peek() == '[') {
        const std::size_t at = s.pos;
        ++s.pos;
        s.skip_space();
        const double lower = s.number();
        s.skip_space();
        if (s.at_end() || s.peek() != ',') s.fail("expected ','");
        ++s.pos;
        s.skip_space();
        const double upper = s.number();
        s.skip_space();
        if (s.at_end() || s.peek() != ']') s.fail("expected ']'");
        ++s.pos;
        s.expect_end("']'");
        return {std::move(name), checked_range(lower, upper, at)};
    }
    if (s.peek() == '{') {
        ++s.pos;
        std::vector<std::string> values;
        while (true) {
            const std::size_t value_begin = s.pos;
            while (!s.at_end() && s.peek() != ',' && s.peek() != '}') ++s.pos;
            if (s.at_end()) s.fail("expected '}'");
            std::string value = trim(text.substr(value_begin, s.pos - value_begin));
            if (value.empty())
                throw StencilParseError("expected a value", value_begin);
            values.push_back(std::move(value));
            if (s.peek() == '}') break;
            ++s.pos;  // consume ','
        }
        ++s.pos;  // consume '}'
        s.expect_end("'}'");
        return {std::move(name), DiscreteSet(std::move(values))};
    }
    s.fail("expected '[' or '{'");
}

}  // namespace matchdeg
