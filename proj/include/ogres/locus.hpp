#pragma once
// One component of the image of the exceptional locus.

#include <string>
#include <vector>

#include "seqmodel.hpp"

namespace ogres {

struct OriginMismatch : Error { using Error::Error; };

enum class Origin { R, N, Ns, NsParity, D };
enum class RCase { None, IA, IB, IC, ID };
enum class Classification { Singular, Smooth, ByCodim };

struct SigmaLocus {
    Origin origin = Origin::R;
    int index = 0;  // h for R and D, g for N, 0 otherwise
    RCase rcase = RCase::None;
    std::vector<Sequence> members;  // two when a reducible quadric split occurred
    int codim = 0;
    int fiber_dim = 0;
    int preimage_codim = 0;
    Classification classification = Classification::Singular;
    bool redundant = false;
    int rule1_corank = -1;  // r_{i_0} picked by Rule 1, when it ran
};

inline std::string origin_name(const SigmaLocus& l) {
    switch (l.origin) {
        case Origin::R: return "R(" + std::to_string(l.index) + ")";
        case Origin::N: return "N(" + std::to_string(l.index) + ")";
        case Origin::Ns: return "Ns";
        case Origin::NsParity: return "NsParity";
        case Origin::D: return "D(" + std::to_string(l.index) + ")";
    }
    return "?";
}

inline std::string rcase_name(RCase c) {
    switch (c) {
        case RCase::IA: return "I.A";
        case RCase::IB: return "I.B";
        case RCase::IC: return "I.C";
        case RCase::ID: return "I.D";
        default: return "";
    }
}

inline std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Singular: return "Singular";
        case Classification::Smooth: return "Smooth";
        default: return "ByCodim";
    }
}

}  // namespace ogres
