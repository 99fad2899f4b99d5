#pragma once

#include "rigdp/exact.hpp"
#include "rigdp/wps.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigdp {

struct InvalidFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FormatKind { Hypersurface, CI2, PfaffGr, SegreP2P2 };
const char* kind_name(FormatKind k);
int codimension(FormatKind k);

// Half-integer parameters are stored doubled.
struct FormatDescriptor {
    FormatKind kind = FormatKind::Hypersurface;
    Weights weights;           // ambient for Hypersurface / CI2
    std::vector<int> degrees;  // equation degrees for Hypersurface / CI2
    std::array<int, 5> w2{};   // PfaffGr: 2*w_i, ascending
    std::array<int, 3> b2{};   // SegreP2P2: 2*b_i, ascending
    std::array<int, 3> c2{};   // SegreP2P2: 2*c_j, ascending
    std::vector<int> cones;    // ascending
    std::vector<int> cuts;     // ascending

    static FormatDescriptor hypersurface(int d, Weights w);
    static FormatDescriptor ci2(int d1, int d2, Weights w);
    static FormatDescriptor pfaff(std::array<int, 5> w2, std::vector<int> cones, std::vector<int> cuts);
    static FormatDescriptor segre(std::array<int, 3> b2, std::array<int, 3> c2, std::vector<int> cones,
                                  std::vector<int> cuts);

    int codim() const { return codimension(kind); }
    std::string str() const;
    // Inverse of str(). Throws InvalidFormat.
    static FormatDescriptor parse(const std::string& s);
    friend auto operator<=>(const FormatDescriptor&, const FormatDescriptor&) = default;
};

// a_ij = w_i + w_j for i < j in lexicographic order (12,13,14,15,23,24,25,34,35,45).
std::array<int, 10> plucker_weights(const std::array<int, 5>& w2);
// position of entry (i,j), i != j, 0-based, in the lexicographic list
int plucker_index(int i, int j);
std::string plucker_matrix_str(const std::array<int, 10>& a);
// s - w_i for i = 1..5
std::array<int, 5> pfaffian_degrees(const std::array<int, 5>& w2);

struct SegreData {
    std::array<int, 9> a{};       // row-major b_i + c_j
    std::array<int, 9> minors{};  // T - a_kl, minor omitting row k and column l
    int T = 0;
};
SegreData segre_weights(const std::array<int, 3>& b2, const std::array<int, 3>& c2);
std::string matrix3_str(const std::array<int, 9>& a);

// Weights of the format variables followed by the cone weights, before cutting.
Weights pre_ambient(const FormatDescriptor& f);
Weights ambient_after_cuts(const FormatDescriptor& f);
std::vector<int> equation_degrees(const FormatDescriptor& f);  // ascending
int canonical_degree(const FormatDescriptor& f);
int adjunction_number(const FormatDescriptor& f);  // q = deg N
HilbertData hilbert_series(const FormatDescriptor& f);

}  // namespace rigdp
