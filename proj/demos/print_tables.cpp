// Render the three coefficient tables in plain text.

#include <iostream>

#include "trigsum/format.hpp"

int main() {
    using namespace trigsum;
    std::cout << "cosecant-number polynomials c_{rho,k}, k = 0..8\n\n"
              << emit_table(TableKind::cosecant, 8, TableFormat::plain) << "\n";
    std::cout << "half-angle sum polynomials, v = 1..8\n\n"
              << emit_table(TableKind::gf, 8, TableFormat::plain) << "\n";
    std::cout << "full-circle sum polynomials, v = 1..8\n\n"
              << emit_table(TableKind::dowker, 8, TableFormat::plain);
    return 0;
}
