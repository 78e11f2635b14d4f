#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pis/bitset.hpp"

namespace pis {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Specification of a finite commutative ring with unity.
//
//   Zmod    Z/nZ, n >= 2
//   GF      field of order p^k, built from the lexicographically smallest
//           monic irreducible polynomial of degree k over F_p
//   MonAlg  GF(q)-algebra spanned by the monomials in the given variables
//           that are not divisible by any killed monomial; multiplication
//           reduces killed products to 0.  The killed set must make every
//           variable nilpotent, so the basis is finite.
//   Product componentwise product of >= 2 factors (nested products are
//           flattened on parse)
//   Table   explicit Cayley tables loaded from a file
struct RingSpec {
    enum class Kind { Zmod, GF, MonAlg, Product, Table };

    Kind kind = Kind::Zmod;
    long modulus = 0;                       // Zmod
    long p = 0, k = 0;                      // GF
    long coeffOrder = 0;                    // MonAlg coefficient field order q
    std::vector<std::string> vars;          // MonAlg variable names
    std::vector<std::vector<int>> killed;   // MonAlg killed monomials, exponent vectors
    std::vector<RingSpec> factors;          // Product
    std::string tablePath;                  // Table

    std::string text() const;
};

// Grammar (whitespace-insensitive):
//   spec := "Z" INT | "GF" INT INT
//         | "mon" INT "[" var ("," var)* "]" "/" "(" mono ("," mono)* ")"
//         | "prod" "(" spec ("," spec)* ")"
//         | "table" PATH
//   mono := var("^"INT)? (var("^"INT)?)*
// Throws ParseError on syntax or semantic violations.
RingSpec parse_ring_spec(const std::string& text);

// Element-indexed ring given by full addition/multiplication tables.
// Immutable after construction.
struct FiniteRing {
    int order = 0;
    std::vector<uint16_t> addTable, mulTable;  // order x order, row-major
    std::vector<uint16_t> negTable;            // additive inverses
    int zero = 0, one = 0;
    std::vector<std::string> labels;
    RingSpec provenance;

    int add(int a, int b) const { return addTable[size_t(a) * order + b]; }
    int mul(int a, int b) const { return mulTable[size_t(a) * order + b]; }
    int neg(int a) const { return negTable[a]; }

    std::optional<int> element_by_label(std::string_view label) const;
};

// Builds the ring and, for orders <= 256, verifies the commutative ring
// axioms exhaustively.  Throws BuildError when the order would exceed
// orderCap or an axiom fails.
FiniteRing build_ring(const RingSpec& spec, int orderCap = 4096);

// Reads the Table file format: "order N" / "zero i" / "one j", then N rows
// of N add entries and N rows of N mul entries.
FiniteRing load_table_ring(const std::string& path);

// Exactly the elements u with u*v = 1 for some v.
Bitset units(const FiniteRing& R);

// Exhaustive axiom check; throws BuildError naming the failing axiom and a
// witness triple.
void check_ring_axioms(const FiniteRing& R);

// Product rings index elements in mixed radix with the first factor varying
// fastest: index = c0 + o0*(c1 + o1*(c2 + ...)).
int product_index(const std::vector<int>& factorOrders, const std::vector<int>& components);
std::vector<int> product_components(const std::vector<int>& factorOrders, int index);

}  // namespace pis
