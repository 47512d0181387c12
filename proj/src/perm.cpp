#include "outcat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace outcat {

Perm::Perm(int degree) {
    if (degree < 0 || degree > 16) throw ValidationError("permutation degree out of range");
    img_.resize(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) img_[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
}

Perm Perm::from_images(std::vector<uint8_t> images) {
    if (images.size() > 16) throw ValidationError("permutation degree out of range");
    std::vector<bool> seen(images.size(), false);
    for (uint8_t v : images) {
        if (v >= images.size() || seen[v]) throw ValidationError("image array is not a bijection");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
    Perm p(degree);
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ValidationError("bad cycle text: " + text);
        ++i;
        std::vector<int> cyc;
        int cur = -1;
        bool in_num = false;
        for (; i < text.size() && text[i] != ')'; ++i) {
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur = (in_num ? cur * 10 : 0) + (c - '0');
                in_num = true;
            } else if (c == ' ' || c == ',') {
                if (in_num) cyc.push_back(cur);
                in_num = false;
            } else {
                throw ValidationError("bad cycle text: " + text);
            }
        }
        if (i == text.size()) throw ValidationError("unterminated cycle: " + text);
        ++i; // ')'
        if (in_num) cyc.push_back(cur);
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k] - 1;
            int b = cyc[(k + 1) % cyc.size()] - 1;
            if (a < 0 || a >= degree || b < 0) throw ValidationError("cycle point out of range: " + text);
            p.img_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
        }
    }
    // The writes above may clash for malformed input; re-validate.
    return from_images(p.img_);
}

Perm Perm::then(const Perm& o) const {
    if (degree() != o.degree()) throw ValidationError("composing permutations of different degree");
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::sign() const {
    int parity = 0;
    for (int len : cycle_type()) parity ^= (len - 1) & 1;
    return parity ? -1 : 1;
}

int Perm::order() const {
    long long ord = 1;
    for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long long>(len));
    return static_cast<int>(ord);
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> out;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string Perm::cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = img_[j];
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

uint64_t Perm::key() const {
    uint64_t k = 0;
    for (size_t i = 0; i < img_.size(); ++i) k |= static_cast<uint64_t>(img_[i]) << (4 * i);
    return k;
}

} // namespace outcat
