#include "esum/catalog.hpp"

namespace esum {

// One line per record:  id | family | order | lhs | rhs | status | citation
// rhs terms: rational coefficient, optional atom factors, optional reference
// S{<sum expression>} (resolved against other records or the classical
// reductions) or K{<kernel>} (resolved exactly by partial fractions).
// Coefficients are encoded verbatim from the source, including non-reduced
// fractions such as 135/24, 279/24 and 515/40.
const char* catalog_source_text() {
  return R"CATALOG(
# ---------------------------------------------------------------- family 0
F0.s(2,2)   |0|4 |h2/k^2      |45/16 zeta(4) - 1 sigma(3)|expected_pass|zero family, order 4
F0.u(2,2)   |0|4 |H2/(2k-1)^2 |-15/16 zeta(4) + 4 zeta(2) - 8 ln2 + 1 sigma(3)|expected_pass|zero family, order 4 (source has a stray parenthesis after the ln2 term)
F0.v(2,2)   |0|4 |h2/(2k-1)^2 |75/64 zeta(4)|expected_pass|zero family, order 4
F0.s(2,4)   |0|6 |h2/k^4      |135/24 zeta(6) - 7/4 zeta(3)*zeta(3) - 2 sigma(5)|expected_pass|zero family, order 6
F0.s(3,3)   |0|6 |h3/k^3      |-135/16 zeta(6) + 91/16 zeta(3)*zeta(3) + 3/2 sigma(5)|expected_pass|zero family, order 6
F0.s(4,2)   |0|6 |h4/k^2      |495/64 zeta(6) - 63/16 zeta(3)*zeta(3) - 1/2 sigma(5)|expected_pass|zero family, order 6
F0.u(2,4)   |0|6 |H2/(2k-1)^4 |-195/32 zeta(6) + 63/16 zeta(3)*zeta(3) + 15/4 zeta(4) - 7 zeta(3) + 10 zeta(2) - 16 ln2 + 1/2 sigma(5)|expected_pass|zero family, order 6
F0.u(4,2)   |0|6 |H4/(2k-1)^2 |-207/48 zeta(6) + 7/4 zeta(3)*zeta(3) + 1 zeta(4) + 4 zeta(3) + 24 zeta(2) - 64 ln2 + 2 sigma(5)|expected_pass|zero family, order 6
F0.v(2,4)   |0|6 |h2/(2k-1)^4 |27/32 zeta(6) + 7/64 zeta(3)*zeta(3)|expected_pass|zero family, order 6
F0.v(4,2)   |0|6 |h4/(2k-1)^2 |351/256 zeta(6) - 7/64 zeta(3)*zeta(3)|expected_pass|zero family, order 6
F0.s(2,6)   |0|8 |h2/k^6      |13/2 zeta(8) + 3/2 zeta(3)*zeta(5) - 3 sigma(7) - 17/4 tau(6)|expected_pass|zero family, order 8
F0.s(3,5)   |0|8 |h3/k^5      |1073/64 zeta(8) - 143/4 zeta(3)*zeta(5) + 15/4 sigma(7) + 391/16 tau(6)|expected_pass|zero family, order 8
F0.s(4,4)   |0|8 |h4/k^4      |-2661/64 zeta(8) + 271/4 zeta(3)*zeta(5) - 5/2 sigma(7) - 153/4 tau(6)|expected_pass|zero family, order 8
F0.s(5,3)   |0|8 |h5/k^3      |5335/256 zeta(8) - 1123/32 zeta(3)*zeta(5) + 15/16 sigma(7) + 1445/64 tau(6)|expected_pass|zero family, order 8
F0.s(6,2)   |0|8 |h6/k^2      |569/128 zeta(8) + 51/32 zeta(3)*zeta(5) - 3/16 sigma(7) - 289/64 tau(6)|expected_pass|zero family, order 8
F0.u(6,2)   |0|8 |H6/(2k-1)^2 |-21/4 zeta(8) - 3/2 zeta(3)*zeta(5) + 1 zeta(6) + 4 zeta(5) + 12 zeta(4) + 32 zeta(3) + 128 zeta(2) - 384 ln2 + 3 sigma(7) + 17/4 tau(6)|expected_pass|zero family, order 8
F0.u(2,6)   |0|8 |H2/(2k-1)^6 |-1077/384 zeta(8) + 63/16 zeta(6) - 51/32 zeta(3)*zeta(5) - 31/4 zeta(5) + 45/4 zeta(4) - 14 zeta(3) + 16 zeta(2) - 24 ln2 + 3/16 sigma(7) + 289/64 tau(6)|expected_pass|zero family, order 8
F0.v(2,6)   |0|8 |h2/(2k-1)^6 |307/512 zeta(8) + 3/8 zeta(3)*zeta(5) - 17/256 tau(6)|expected_pass|zero family, order 8
F0.v(3,5)   |0|8 |h3/(2k-1)^5 |-1093/2048 zeta(8) + 407/256 zeta(3)*zeta(5) - 221/512 tau(6)|expected_pass|zero family, order 8
F0.v(4,4)   |0|8 |h4/(2k-1)^4 |1035/1024 zeta(8)|expected_pass|zero family, order 8
F0.v(5,3)   |0|8 |h5/(2k-1)^3 |3133/2048 zeta(8) - 95/128 zeta(3)*zeta(5) + 221/512 tau(6)|expected_pass|zero family, order 8
F0.v(6,2)   |0|8 |h6/(2k-1)^2 |833/512 zeta(8) - 3/8 zeta(3)*zeta(5) + 17/256 tau(6)|expected_pass|zero family, order 8
F0.t(1,9)   |0|10|H1/k^9      |11/4 zeta(10) - 1 zeta(3)*zeta(7) - 1/2 zeta(5)*zeta(5)|expected_pass|zero family, order 10 derivation
F0.t(5,5)   |0|10|H5/k^5      |1/2 zeta(10) + 1/2 zeta(5)*zeta(5)|expected_pass|zero family, order 10 derivation
F0.t(6,4)   |0|10|H6/k^4      |21/10 zeta(10) - 1 S{H4/k^6}|expected_pass|zero family, order 10 derivation
F0.t(7,3)   |0|10|H7/k^3      |1 zeta(10) + 1 zeta(3)*zeta(7) - 1 S{H3/k^7}|expected_pass|zero family, order 10 derivation
F0.t(8,2)   |0|10|H8/k^2      |53/20 zeta(10) - 1 tau(8)|expected_pass|zero family, order 10 derivation
F0.t(3,7)   |0|10|H3/k^7      |-33/4 zeta(10) + 7 zeta(3)*zeta(7) + 4 zeta(5)*zeta(5) - 7/2 tau(8)|expected_pass|zero family, order 10 derivation
F0.t(4,6)   |0|10|H4/k^6      |227/20 zeta(10) - 7 zeta(3)*zeta(7) - 5 zeta(5)*zeta(5) + 7/2 tau(8)|expected_pass|zero family, order 10 derivation
F0.t(6,2)   |0|8 |H6/k^2      |1 zeta(2)*zeta(6) + 1 zeta(8) - 1 tau(6)|expected_pass|symmetry relation instantiated at (6,2)
F0.s(2,8).pre|0|10|h2/k^8     |239/20 zeta(10) - 4 zeta(3)*zeta(7) - 2 zeta(5)*zeta(5) + 2 S{H1/k^9} - 4 sigma(9) - 13/4 tau(8) + 3 S{H3/k^7} - 5/2 S{H4/k^6} + 2 S{H5/k^5} - 3/2 S{H6/k^4} + 1 S{H7/k^3} - 1/2 S{H8/k^2}|expected_pass|zero family, order 10 derivation (intermediate)
F0.s(2,8)   |0|10|h2/k^8      |-103/8 zeta(10) + 16 zeta(3)*zeta(7) + 11 zeta(5)*zeta(5) - 4 sigma(9) - 53/4 tau(8)|expected_pass|zero family, order 10 derivation
F0.split.o10|0|10|H2/k^8      |4/1023 S{h2/k^8} + 256/1023 S{H2/(2k-1)^8} - 256/1023 K{1/(k^2(2k-1)^8)} + 1024/1023 S{h2/(2k-1)^8}|expected_pass|zero family, order 10 even/odd index split (rearranged)
F0.u(2,8)   |0|10|H2/(2k-1)^8 |255/256 zeta(2)*zeta(8) + 1 K{1/(k^2(2k-1)^8)} - 1 S{h8/k^2}|expected_pass|zero family, order 10 derivation
F0.s(8,2).pre|0|10|h8/k^2     |255/256 zeta(2)*zeta(8) + 1/64 S{h2/k^8} - 1023/256 tau(8) + 4 S{h2/(2k-1)^8}|expected_pass|zero family, order 10 derivation (rearranged)
F0.v(2,8)   |0|10|h2/(2k-1)^8 |486/1024 zeta(2)*zeta(8) + 148/512 zeta(3)*zeta(7) - 33/128 zeta(4)*zeta(6) + 31/256 zeta(5)*zeta(5) + 1/64 sigma(9) + 1/256 S{h2/k^8}|expected_pass|zero family, order 10 derivation
F0.s(8,2)   |0|10|h8/k^2      |3317/1024 zeta(10) + 53/32 zeta(3)*zeta(7) + 53/64 zeta(5)*zeta(5) - 1/16 sigma(9) - 1129/256 tau(8)|expected_pass|zero family, order 10 derivation
F0.s(7,3).pre|0|10|h7/k^3     |127/128 zeta(3)*zeta(7) + 1/16 S{h3/k^7} - 1023/128 S{H3/k^7} + 8 S{h3/(2k-1)^7}|expected_pass|zero family, order 10 derivation (intermediate)
F0.v(3,7)   |0|10|h3/(2k-1)^7 |1023/2048 zeta(10) + 83/128 zeta(3)*zeta(7) - 93/512 zeta(5)*zeta(5) - 7/128 sigma(9) - 7/256 S{h2/k^8} - 1/128 S{h3/k^7}|expected_pass|zero family, order 10 derivation
F0.s(7,3)   |0|10|h7/k^3      |37247/512 zeta(10) - 3409/64 zeta(3)*zeta(7) - 2293/64 zeta(5)*zeta(5) + 7/16 sigma(9) + 7903/256 tau(8)|expected_pass|zero family, order 10 derivation
F0.s(4,6).pre|0|10|h4/k^6     |6461/64 zeta(10) - 1491/16 zeta(3)*zeta(7) - 1035/16 zeta(5)*zeta(5) + 14 sigma(9) + 2275/32 tau(8) - 3 S{h3/k^7}|expected_pass|zero family, order 10 derivation (intermediate)
F0.s(4,6)   |0|10|h4/k^6      |-28051/64 zeta(10) + 4365/16 zeta(3)*zeta(7) + 3951/16 zeta(5)*zeta(5) - 7 sigma(9) - 4757/32 tau(8)|expected_pass|zero family, order 10 derivation
F0.s(6,4).pre|0|10|h6/k^4     |-35525/256 zeta(10) + 5621/64 zeta(3)*zeta(7) + 4093/64 zeta(5)*zeta(5) + 7/2 sigma(9) - 4837/128 tau(8) - 3/4 S{h3/k^7}|expected_pass|zero family, order 10 derivation (intermediate)
F0.s(6,4)   |0|10|h6/k^4      |-70037/256 zeta(10) + 11477/64 zeta(3)*zeta(7) + 9079/64 zeta(5)*zeta(5) - 7/4 sigma(9) - 11869/128 tau(8)|expected_pass|zero family, order 10 derivation
F0.s(5,5).pre|0|10|h5/k^5     |-25095/128 zeta(10) + 5215/32 zeta(3)*zeta(7) + 8231/64 zeta(5)*zeta(5) - 175/8 sigma(9) - 7665/64 tau(8) + 15/4 S{h3/k^7}|expected_pass|zero family, order 10 derivation (intermediate)
F0.s(5,5)   |0|10|h5/k^5      |61185/128 zeta(10) - 9425/32 zeta(3)*zeta(7) - 16699/64 zeta(5)*zeta(5) + 35/8 sigma(9) + 9915/64 tau(8)|expected_pass|zero family, order 10 derivation
F0.oddchain |0|10|h7/k^3      |889/128 zeta(3)*zeta(7) - 7/8 sigma(9) - 7/8 S{h2/k^8} - 1 S{h3/k^7} - 5/4 S{h4/k^6} - 3/2 S{h5/k^5} - 3/2 S{h6/k^4}|expected_pass|zero family, order 10 odd-denominator chain (rearranged for the h7 term)
F0.s(3,7)   |0|10|h3/k^7      |719/4 zeta(10) - 122 zeta(3)*zeta(7) - 831/8 zeta(5)*zeta(5) + 7 sigma(9) + 293/4 tau(8)|expected_pass|zero family, order 10 derivation
AppB.s(2,8) |0|10|h2/k^8      |-515/40 zeta(10) + 16 zeta(3)*zeta(7) + 11 zeta(5)*zeta(5) - 4 sigma(9) - 53/4 tau(8)|expected_pass|appendix B
AppB.s(3,7) |0|10|h3/k^7      |719/4 zeta(10) - 122 zeta(3)*zeta(7) - 831/8 zeta(5)*zeta(5) + 7 sigma(9) + 293/4 tau(8)|expected_pass|appendix B
AppB.s(4,6) |0|10|h4/k^6      |-28051/64 zeta(10) + 4365/16 zeta(3)*zeta(7) + 3951/16 zeta(5)*zeta(5) - 7 sigma(9) - 4757/32 tau(8)|expected_pass|appendix B
AppB.s(5,5) |0|10|h5/k^5      |61185/128 zeta(10) - 9425/32 zeta(3)*zeta(7) - 16699/64 zeta(5)*zeta(5) + 35/8 sigma(9) + 9915/64 tau(8)|expected_pass|appendix B
AppB.s(6,4) |0|10|h6/k^4      |-70037/256 zeta(10) + 11477/64 zeta(3)*zeta(7) + 9079/64 zeta(5)*zeta(5) - 7/4 sigma(9) - 11869/128 tau(8)|expected_pass|appendix B
AppB.s(7,3) |0|10|h7/k^3      |37247/512 zeta(10) - 3409/64 zeta(3)*zeta(7) - 2293/64 zeta(5)*zeta(5) + 7/16 sigma(9) + 7903/256 tau(8)|expected_pass|appendix B
# ---------------------------------------------------------------- family 1
F1.o4.H1h1_k2    |1|4|H1*h1/k^2|45/16 zeta(4) + 1/2 sigma(3)|expected_pass|first family, order 4
F1.o4.H1h1_k2.pre|1|4|H1*h1/k^2|1/2 sigma(3) - 1 S{h2/k^2}|suspect|first family, order 4 derivation (intermediate); fails by ~4.8; the rearranged relation should read 3/2 sigma(3) + s(2,2)
F1.o4.H1h1_k2.pre.fix|1|4|H1*h1/k^2|3/2 sigma(3) + 1 S{h2/k^2}|expected_pass|first family, order 4 derivation (intermediate); corrected form (see the suspect twin)
F1.o6.H1h1_k4    |1|6|H1*h1/k^4|135/24 zeta(6) - 7/2 zeta(3)*zeta(3) + 1/2 sigma(5)|expected_pass|first family, order 6
F1.o6.H1h2_k3    |1|6|H1*h2/k^3|-135/24 zeta(6) + 63/8 zeta(3)*zeta(3) - 3/2 zeta(2)*sigma(3) - 1 sigma(5)|expected_pass|first family, order 6
F1.o6.H2h1_k3    |1|6|H2*h1/k^3|-7/8 zeta(3)*zeta(3) + 1 zeta(2)*sigma(3) + 1/2 sigma(5)|expected_pass|first family, order 6
F1.o6.H1h3_k2    |1|6|H1*h3/k^2|405/128 zeta(6) - 105/32 zeta(3)*zeta(3) + 3/2 zeta(2)*sigma(3) + 3/4 sigma(5)|expected_pass|first family, order 6
F1.o6.H2h2_k2    |1|6|H2*h2/k^2|45/32 zeta(6) + 21/8 zeta(3)*zeta(3) - 1 zeta(2)*sigma(3) - 1 sigma(5)|expected_pass|first family, order 6
F1.o6.H3h1_k2    |1|6|H3*h1/k^2|135/32 zeta(6) - 7/4 zeta(3)*zeta(3) + 1/2 sigma(5)|expected_pass|first family, order 6
F1.o8.H1h3_k4.pre|1|8|H1*h3/k^4|-225/16 zeta(8) - 93/8 zeta(3)*zeta(5) + 63/8 zeta(2)*zeta(3)*zeta(3) + 3 zeta(2)*sigma(5) + 5/2 S{h3/k^5} + 3 S{h4/k^4}|expected_pass|first family, order 8 worked example (intermediate)
F1.o8.H1h3_k4    |1|8|H1*h3/k^4|-12401/128 zeta(8) + 409/4 zeta(3)*zeta(5) + 63/8 zeta(2)*zeta(3)*zeta(3) + 3 zeta(2)*sigma(5) + 15/8 sigma(7) - 1717/32 tau(6)|expected_pass|first family, order 8 worked example
F1.o8.H1h1_k6    |1|8|H1*h1/k^6|-19/2 zeta(3)*zeta(5) + 7/2 zeta(2)*zeta(3)*zeta(3) + 7/2 sigma(7) + 1 S{h2/k^6}|expected_pass|first family, order 8
F1.o8.H1h2_k5    |1|8|H1*h2/k^5|1697/32 zeta(8) - 103/2 zeta(3)*zeta(5) - 35/4 zeta(2)*zeta(3)*zeta(3) - 3/2 zeta(2)*sigma(5) - 3/2 sigma(7) + 289/8 tau(6)|expected_pass|first family, order 8
F1.o8.H2h1_k5.pre|1|8|H2*h1/k^5|97/4 zeta(3)*zeta(5) - 7 zeta(2)*zeta(3)*zeta(3) + 1 zeta(2)*sigma(5) - 7 sigma(7) - 5 S{h2/k^6} - 2 S{h3/k^5}|expected_pass|first family, order 8 (intermediate)
F1.o8.H2h1_k5    |1|8|H2*h1/k^5|-2113/32 zeta(8) + 353/4 zeta(3)*zeta(5) - 7 zeta(2)*zeta(3)*zeta(3) + 1 zeta(2)*sigma(5) + 1/2 sigma(7) - 221/8 tau(6)|expected_pass|first family, order 8
F1.o8.H2h2_k4.pre|1|8|H2*h2/k^4|75/2 zeta(8) - 31 zeta(3)*zeta(5) + 21/2 zeta(2)*zeta(3)*zeta(3) - 2 zeta(2)*sigma(5) - 8 S{h3/k^5} - 6 S{h4/k^4} - 9/2 S{h2/k^6}|expected_pass|first family, order 8 (intermediate)
F1.o8.H2h2_k4    |1|8|H2*h2/k^4|3955/32 zeta(8) - 633/4 zeta(3)*zeta(5) + 21/2 zeta(2)*zeta(3)*zeta(3) - 2 zeta(2)*sigma(5) - 3/2 sigma(7) + 425/8 tau(6)|expected_pass|first family, order 8
F1.o8.H3h1_k4.pre|1|8|H3*h1/k^4|-75/4 zeta(8) - 35/2 zeta(3)*zeta(5) + 7/2 zeta(2)*zeta(3)*zeta(3) + 21/2 sigma(7) + 8 S{h3/k^5} + 4 S{h4/k^4} + 10 S{h2/k^6}|expected_pass|first family, order 8 (intermediate)
F1.o8.H3h1_k4    |1|8|H3*h1/k^4|225/16 zeta(8) - 35/2 zeta(3)*zeta(5) + 7/2 zeta(2)*zeta(3)*zeta(3) + 1/2 sigma(7)|expected_pass|first family, order 8
F1.o10.H1h1_k8.pre|1|10|H1*h1/k^8|-67/2 zeta(3)*zeta(7) - 31/4 zeta(5)*zeta(5) + 19 zeta(2)*zeta(3)*zeta(5) + 7/2 zeta(3)*zeta(3)*zeta(4) + 9/2 sigma(9) + 1 S{h2/k^8}|expected_pass|first family, order 10 (intermediate)
F1.o10.H1h1_k8   |1|10|H1*h1/k^8|-103/8 zeta(10) - 35/2 zeta(3)*zeta(7) + 13/4 zeta(5)*zeta(5) + 19 zeta(2)*zeta(3)*zeta(5) + 7/2 zeta(3)*zeta(3)*zeta(4) + 1/2 sigma(9) - 53/4 tau(8)|expected_pass|first family, order 10
F1.o10.H1h2_k7.pre|1|10|H1*h2/k^7|381/4 zeta(3)*zeta(7) + 31/2 zeta(5)*zeta(5) - 63 zeta(2)*zeta(3)*zeta(5) - 7/2 zeta(3)*zeta(3)*zeta(4) - 3/2 zeta(2)*sigma(7) + 4 S{h2/k^8} + 2 S{h3/k^7}|expected_pass|first family, order 10 (intermediate)
F1.o10.H1h2_k7   |1|10|H1*h2/k^7|308 zeta(10) - 339/4 zeta(3)*zeta(7) - 593/4 zeta(5)*zeta(5) - 63 zeta(2)*zeta(3)*zeta(5) - 7/2 zeta(3)*zeta(3)*zeta(4) - 3/2 zeta(2)*sigma(7) - 2 sigma(9) + 187/2 tau(8)|expected_pass|first family, order 10
F1.o10.H2h1_k7.pre|1|10|H2*h1/k^7|303/4 zeta(3)*zeta(7) + 31 zeta(5)*zeta(5) - 45 zeta(2)*zeta(3)*zeta(5) - 7 zeta(3)*zeta(3)*zeta(4) + 1 zeta(2)*sigma(7) - 27/2 sigma(9) - 7 S{h2/k^8} - 2 S{h3/k^7}|expected_pass|first family, order 10 (intermediate)
F1.o10.H2h1_k7   |1|10|H2*h1/k^7|-2155/8 zeta(10) + 831/4 zeta(3)*zeta(7) + 647/4 zeta(5)*zeta(5) - 45 zeta(2)*zeta(3)*zeta(5) - 7 zeta(3)*zeta(3)*zeta(4) + 1 zeta(2)*sigma(7) + 1/2 sigma(9) - 215/4 tau(8)|expected_pass|first family, order 10
AppA.H1h4_k3.pre |1|8|H1*h4/k^3|2 S{h4/k^4} + 4 S{h5/k^3} - 15/8 zeta(4)*sigma(3) - 3/2 zeta(2)*S{h3/k^3}|expected_pass|appendix A (intermediate)
AppA.H1h4_k3     |1|8|H1*h4/k^3|1363/64 zeta(8) - 39/8 zeta(3)*zeta(5) - 273/32 zeta(2)*zeta(3)*zeta(3) - 15/8 zeta(4)*sigma(3) - 9/4 zeta(2)*sigma(5) - 5/4 sigma(7) + 221/16 tau(6)|expected_pass|appendix A
AppA.H2h3_k3.pre |1|8|H2*h3/k^3|-225/4 zeta(8) + 279/8 zeta(3)*zeta(5) + 259/16 zeta(2)*zeta(3)*zeta(3) + 3/2 zeta(2)*sigma(5) - 5/2 S{h3/k^5} - 9 S{h4/k^4} - 12 S{h5/k^3}|expected_pass|appendix A (intermediate)
AppA.H2h3_k3     |1|8|H2*h3/k^3|3323/128 zeta(8) - 515/8 zeta(3)*zeta(5) + 259/16 zeta(2)*zeta(3)*zeta(3) + 3/2 zeta(2)*sigma(5) + 15/8 sigma(7) + 391/32 tau(6)|expected_pass|appendix A
AppA.H3h2_k3     |1|8|H3*h2/k^3|-4797/32 zeta(8) - 887/4 zeta(3)*zeta(5) - 217/8 zeta(2)*zeta(3)*zeta(3) - 3/2 sigma(7) - 459/8 tau(6)|suspect|appendix A; fails by ~5.5e2; sign of the zeta(3)zeta(5) term; +887/4 verifies
AppA.H3h2_k3.fix|1|8|H3*h2/k^3|-4797/32 zeta(8) + 887/4 zeta(3)*zeta(5) - 217/8 zeta(2)*zeta(3)*zeta(3) - 3/2 sigma(7) - 459/8 tau(6)|expected_pass|appendix A; corrected form (see the suspect twin)
AppA.H4h1_k3     |1|8|H4*h1/k^3|2113/32 zeta(8) - 93 zeta(3)*zeta(5) + 35/4 zeta(2)*zeta(3)*zeta(3) + 1 zeta(4)*sigma(3) + 1/2 sigma(7) + 221/8 tau(6)|expected_pass|appendix A
AppA.H1h5_k2     |1|8|H1*h5/k^2|14335/512 zeta(8) - 2859/64 zeta(3)*zeta(5) + 189/32 zeta(2)*zeta(3)*zeta(3) + 15/8 zeta(4)*sigma(3) + 3/4 zeta(2)*sigma(5) + 15/32 sigma(7) + 1445/128 tau(6)|expected_pass|appendix A
AppA.H2h4_k2.pre |1|8|H2*h4/k^2|12675/128 zeta(8) - 357/16 zeta(2)*zeta(3)*zeta(3) - 1/2 zeta(2)*sigma(5) - 1 S{h4/k^4} - 8 S{h5/k^3} - 20 S{h6/k^2}|expected_pass|appendix A (intermediate)
AppA.H2h4_k2     |1|8|H2*h4/k^2|-14723/128 zeta(8) + 1449/8 zeta(3)*zeta(5) - 357/16 zeta(2)*zeta(3)*zeta(3) - 1/2 zeta(2)*sigma(5) - 5/4 sigma(7) - 833/16 tau(6)|expected_pass|appendix A
AppA.H3h3_k2     |1|8|H3*h3/k^2|24447/128 zeta(8) - 2251/8 zeta(3)*zeta(5) + 133/4 zeta(2)*zeta(3)*zeta(3) + 15/8 sigma(7) + 2499/32 S{H6/k^2}|suspect|appendix A; fails by ~4.9e1; the trailing sum reads H^(2)/k^6, not H^(6)/k^2 (integer-relation fit at 180 digits)
AppA.H3h3_k2.fix|1|8|H3*h3/k^2|24447/128 zeta(8) - 2251/8 zeta(3)*zeta(5) + 133/4 zeta(2)*zeta(3)*zeta(3) + 15/8 sigma(7) + 2499/32 tau(6)|expected_pass|appendix A; corrected form (see the suspect twin)
AppA.H4h2_k2.pre |1|8|H4*h2/k^2|4605/32 zeta(8) + 31 zeta(3)*zeta(5) - 77/4 zeta(2)*zeta(3)*zeta(3) - 1 zeta(4)*sigma(3) - 2 S{h2/k^6} - 8 S{h3/k^5} - 18 S{h4/k^4} - 32 S{h5/k^3} - 40 S{h6/k^2}|expected_pass|appendix A (intermediate)
AppA.H4h2_k2     |1|8|H4*h2/k^2|-199/2 zeta(8) + 615/4 zeta(3)*zeta(5) - 77/4 zeta(2)*zeta(3)*zeta(3) - 1 zeta(4)*sigma(3) - 3/2 sigma(7) - 323/8 tau(6)|expected_pass|appendix A
AppA.H5h1_k2.pre |1|8|H5*h1/k^2|-855/16 zeta(8) - 45/2 zeta(3)*zeta(5) + 7/2 zeta(2)*zeta(3)*zeta(3) + 7/2 sigma(7) + 5 S{h2/k^6} + 8 S{h3/k^5} + 12 S{h4/k^4} + 16 S{h5/k^3} + 16 S{h6/k^2}|expected_pass|appendix A (intermediate)
AppA.H5h1_k2     |1|8|H5*h1/k^2|301/16 zeta(8) - 24 zeta(3)*zeta(5) + 7/2 zeta(2)*zeta(3)*zeta(3) + 1/2 sigma(7) + 17/4 tau(6)|expected_pass|appendix A
# ---------------------------------------------------------------- family 2
F2.o4.H1H1_odd2|2|4|H1^2/(2k-1)^2|45/16 zeta(4) - 7 ln2*zeta(3) + 7 zeta(3) + 3 ln2*ln2*zeta(2) - 6 ln2*zeta(2) + 2 zeta(2) - 8 ln2 + 4 ln2*ln2 + 1 sigma(3)|expected_pass|second family, order 4
F2.o5.H1H1_odd3|2|5|H1^2/(2k-1)^3|31/8 zeta(5) - 7/8 zeta(2)*zeta(3) - 45/8 ln2*zeta(4) + 45/8 zeta(4) + 7/2 ln2*ln2*zeta(3) - 7 ln2*zeta(3) - 7/2 zeta(3) + 6 ln2*zeta(2) - 5 zeta(2) + 12 ln2 - 4 ln2*ln2|expected_pass|second family, order 5
F2.o6.H1H1_odd4|2|6|H1^2/(2k-1)^4|585/128 zeta(6) - 31/2 ln2*zeta(5) + 31/2 zeta(5) + 15/4 ln2*ln2*zeta(4) - 15/2 ln2*zeta(4) - 15/8 zeta(4) + 21/4 ln2*zeta(2)*zeta(3) - 35/16 zeta(3)*zeta(3) - 21/4 zeta(2)*zeta(3) + 7 ln2*zeta(3) - 6 ln2*zeta(2) + 8 zeta(2) - 16 ln2 + 4 ln2*ln2 + 1/2 sigma(5)|expected_pass|second family, order 6
F2.o6.H2H2_odd2|2|6|H2^2/(2k-1)^2|195/32 zeta(6) - 5 zeta(4) - 7 zeta(3)*zeta(3) + 16 zeta(3) - 16 ln2*zeta(2) + 24 zeta(2) - 64 ln2 + 8 sigma(3) + 2 zeta(2)*sigma(3)|expected_pass|second family, order 6
F2.o6.H1H2_odd3|2|6|H1*H2/(2k-1)^3|-1035/128 zeta(6) + 93/4 ln2*zeta(5) - 93/4 zeta(5) + 15/2 zeta(4) + 203/32 zeta(3)*zeta(3) - 49/4 ln2*zeta(2)*zeta(3) + 49/4 zeta(2)*zeta(3) - 7 ln2*zeta(3) - 21/2 zeta(3) + 14 ln2*zeta(2) - 18 zeta(2) + 48 ln2 - 12 ln2*ln2 - 2 sigma(3) - 3/4 sigma(5)|expected_pass|second family, order 6
F2.o7.H1H1_odd5|2|7|H1^2/(2k-1)^5|635/64 zeta(7) - 315/32 ln2*zeta(6) + 315/32 zeta(6) + 31/8 ln2*ln2*zeta(5) - 31/32 zeta(2)*zeta(5) - 31/4 ln2*zeta(5) - 93/8 zeta(5) - 315/64 zeta(3)*zeta(4) + 15/2 ln2*zeta(4) - 15/8 zeta(4) + 49/16 ln2*zeta(3)*zeta(3) - 49/16 zeta(3)*zeta(3) + 21/4 zeta(2)*zeta(3) - 7 ln2*zeta(3) + 7/2 zeta(3) + 6 ln2*zeta(2) - 11 zeta(2) + 20 ln2 - 4 ln2*ln2|expected_pass|second family, order 7
F2.o8.H2H3_odd3|2|8|H2*H3/(2k-1)^3|3375/16 zeta(8) + 135/4 zeta(6) - 279/24 zeta(3)*zeta(5) - 217 zeta(5) + 39/2 zeta(4) - 2331/48 zeta(2)*zeta(3)*zeta(3) - 77/4 zeta(3)*zeta(3) + 112 zeta(2)*zeta(3) + 12 ln2*zeta(3) - 32 zeta(3) + 48 ln2*zeta(2) - 200 zeta(2) + 480 ln2 - 36 sigma(3) - 3/2 zeta(2)*sigma(5) - 6 sigma(7) + 1 S{h3/k^5} - 12 S{h5/k^3} - 40 S{h6/k^2}|suspect|second family, order 8; fails by ~2.4e-1; the -6 odd-harmonic sum is over k^5, not k^7
F2.o8.H2H3_odd3.fix|2|8|H2*H3/(2k-1)^3|3375/16 zeta(8) + 135/4 zeta(6) - 279/24 zeta(3)*zeta(5) - 217 zeta(5) + 39/2 zeta(4) - 2331/48 zeta(2)*zeta(3)*zeta(3) - 77/4 zeta(3)*zeta(3) + 112 zeta(2)*zeta(3) + 12 ln2*zeta(3) - 32 zeta(3) + 48 ln2*zeta(2) - 200 zeta(2) + 480 ln2 - 36 sigma(3) - 3/2 zeta(2)*sigma(5) - 6 sigma(5) + 1 S{h3/k^5} - 12 S{h5/k^3} - 40 S{h6/k^2}|expected_pass|second family, order 8; corrected form (see the suspect twin)
AppC.F2.H1H1_odd6|2|8|H1^2/(2k-1)^6|4847/256 zeta(8) - 381/16 ln2*zeta(7) + 381/16 zeta(7) + 63/16 ln2*ln2*zeta(6) - 63/8 ln2*zeta(6) - 189/32 zeta(6) - 351/16 zeta(3)*zeta(5) + 93/16 ln2*zeta(2)*zeta(5) - 93/16 zeta(2)*zeta(5) + 31/4 ln2*zeta(5) + 31/4 zeta(5) + 105/16 ln2*zeta(3)*zeta(4) - 105/16 zeta(3)*zeta(4) - 15/2 ln2*zeta(4) + 45/8 zeta(4) + 147/64 zeta(2)*zeta(3)*zeta(3) + 49/16 zeta(3)*zeta(3) - 21/4 zeta(2)*zeta(3) + 7 ln2*zeta(3) - 7 zeta(3) - 6 ln2*zeta(2) + 14 zeta(2) - 20 ln2 + 4 ln2*ln2 + 3/16 sigma(7) + 289/64 tau(6)|suspect|appendix C, family 2; fails by ~2.8; the bare ln2 coefficient is -24, printed -20
AppC.F2.H1H1_odd6.fix|2|8|H1^2/(2k-1)^6|4847/256 zeta(8) - 381/16 ln2*zeta(7) + 381/16 zeta(7) + 63/16 ln2*ln2*zeta(6) - 63/8 ln2*zeta(6) - 189/32 zeta(6) - 351/16 zeta(3)*zeta(5) + 93/16 ln2*zeta(2)*zeta(5) - 93/16 zeta(2)*zeta(5) + 31/4 ln2*zeta(5) + 31/4 zeta(5) + 105/16 ln2*zeta(3)*zeta(4) - 105/16 zeta(3)*zeta(4) - 15/2 ln2*zeta(4) + 45/8 zeta(4) + 147/64 zeta(2)*zeta(3)*zeta(3) + 49/16 zeta(3)*zeta(3) - 21/4 zeta(2)*zeta(3) + 7 ln2*zeta(3) - 7 zeta(3) - 6 ln2*zeta(2) + 14 zeta(2) - 24 ln2 + 4 ln2*ln2 + 3/16 sigma(7) + 289/64 tau(6)|expected_pass|appendix C, family 2; corrected form (see the suspect twin)
AppC.F2.H1H2_odd5|2|8|H1*H2/(2k-1)^5|-25285/512 zeta(8) + 1905/32 ln2*zeta(7) - 1905/32 zeta(7) + 705/32 zeta(6) + 2189/32 zeta(3)*zeta(5) - 403/16 ln2*zeta(2)*zeta(5) + 403/16 zeta(2)*zeta(5) - 31/4 ln2*zeta(5) - 93/2 zeta(5) - 105/8 ln2*zeta(3)*zeta(4) + 105/8 zeta(3)*zeta(4) + 15 ln2*zeta(4) - 15/4 zeta(4) - 637/64 zeta(2)*zeta(3)*zeta(3) - 175/16 zeta(3)*zeta(3) + 91/4 zeta(2)*zeta(3) - 21 ln2*zeta(3) + 21/2 zeta(3) + 26 ln2*zeta(2) - 60 zeta(2) + 120 ln2 - 20 ln2*ln2 - 2 sigma(3) - 1 sigma(5) - 15/32 sigma(7) - 1445/128 tau(6)|expected_pass|appendix C, family 2
AppC.F2.H1H3_odd4|2|8|H1*H3/(2k-1)^4|-203/16 zeta(8) - 635/4 ln2*zeta(7) + 635/4 zeta(7) - 135/8 zeta(6) - 147/8 zeta(3)*zeta(5) + 341/4 ln2*zeta(2)*zeta(5) - 341/4 zeta(2)*zeta(5) + 62 zeta(5) + 45/4 ln2*zeta(3)*zeta(4) - 45/4 zeta(3)*zeta(4) - 15 ln2*zeta(4) - 75/4 zeta(4) + 161/16 zeta(2)*zeta(3)*zeta(3) + 77/8 zeta(3)*zeta(3) - 53/2 zeta(2)*zeta(3) + 40 ln2*zeta(3) + 44 zeta(3) - 72 ln2*zeta(2) + 120 zeta(2) - 320 ln2 + 80 ln2*ln2 + 2 sigma(3) + 3 sigma(5) - 1/2 zeta(2)*sigma(5) + 5/4 sigma(7) - 221/16 tau(6)|suspect|appendix C, family 2; fails by ~2.5e1; sign of the zeta(8) term; +203/16 verifies
AppC.F2.H1H3_odd4.fix|2|8|H1*H3/(2k-1)^4|203/16 zeta(8) - 635/4 ln2*zeta(7) + 635/4 zeta(7) - 135/8 zeta(6) - 147/8 zeta(3)*zeta(5) + 341/4 ln2*zeta(2)*zeta(5) - 341/4 zeta(2)*zeta(5) + 62 zeta(5) + 45/4 ln2*zeta(3)*zeta(4) - 45/4 zeta(3)*zeta(4) - 15 ln2*zeta(4) - 75/4 zeta(4) + 161/16 zeta(2)*zeta(3)*zeta(3) + 77/8 zeta(3)*zeta(3) - 53/2 zeta(2)*zeta(3) + 40 ln2*zeta(3) + 44 zeta(3) - 72 ln2*zeta(2) + 120 zeta(2) - 320 ln2 + 80 ln2*ln2 + 2 sigma(3) + 3 sigma(5) - 1/2 zeta(2)*sigma(5) + 5/4 sigma(7) - 221/16 tau(6)|expected_pass|appendix C, family 2; corrected form (see the suspect twin)
AppC.F2.H1H4_odd3|2|8|H1*H4/(2k-1)^3|-9011/128 zeta(8) + 1905/8 ln2*zeta(7) - 1905/8 zeta(7) + 69/8 zeta(6) - 1605/16 zeta(3)*zeta(5) - 279/2 ln2*zeta(2)*zeta(5) + 279/2 zeta(2)*zeta(5) - 31/2 zeta(5) - 7/4 ln2*zeta(3)*zeta(4) + 7/4 zeta(3)*zeta(4) + 2 ln2*zeta(4) + 15 zeta(4) - 7/16 zeta(2)*zeta(3)*zeta(3) - 7/2 zeta(3)*zeta(3) + 7 zeta(2)*zeta(3) - 28 ln2*zeta(3) - 132 zeta(3) + 96 ln2*zeta(2) - 120 zeta(2) + 480 ln2 - 160 ln2*ln2 - 4 sigma(5) + 3/2 zeta(2)*sigma(5) - 15/8 sigma(7) + 1717/32 tau(6)|suspect|appendix C, family 2; fails by ~1.4e2; sign of the zeta(8) term; +9011/128 verifies
AppC.F2.H1H4_odd3.fix|2|8|H1*H4/(2k-1)^3|9011/128 zeta(8) + 1905/8 ln2*zeta(7) - 1905/8 zeta(7) + 69/8 zeta(6) - 1605/16 zeta(3)*zeta(5) - 279/2 ln2*zeta(2)*zeta(5) + 279/2 zeta(2)*zeta(5) - 31/2 zeta(5) - 7/4 ln2*zeta(3)*zeta(4) + 7/4 zeta(3)*zeta(4) + 2 ln2*zeta(4) + 15 zeta(4) - 7/16 zeta(2)*zeta(3)*zeta(3) - 7/2 zeta(3)*zeta(3) + 7 zeta(2)*zeta(3) - 28 ln2*zeta(3) - 132 zeta(3) + 96 ln2*zeta(2) - 120 zeta(2) + 480 ln2 - 160 ln2*ln2 - 4 sigma(5) + 3/2 zeta(2)*sigma(5) - 15/8 sigma(7) + 1717/32 tau(6)|expected_pass|appendix C, family 2; corrected form (see the suspect twin)
# ---------------------------------------------------------------- family 3
F3.o4.H1H2_kodd|3|5|H1*H2/k(2k-1)|-31/8 zeta(4) + 7 ln2*zeta(3) - 7 zeta(3) - 2 ln2*ln2*zeta(2) + 4 ln2*zeta(2) + 16 ln2 - 8 ln2*ln2 - 1 sigma(3)|expected_pass|third family, order 4
F3.o6.H1H4_kodd|3|7|H1*H4/k(2k-1)|-535/48 zeta(6) + 31 ln2*zeta(5) - 31 zeta(5) - 2 ln2*ln2*zeta(4) + 4 ln2*zeta(4) - 5 zeta(4) + 7/2 zeta(3)*zeta(3) - 14 ln2*zeta(2)*zeta(3) + 14 zeta(2)*zeta(3) - 16 zeta(3) + 64 ln2 - 32 ln2*ln2 + 2 zeta(2)*sigma(3) - 1 sigma(5)|expected_pass|third family, order 6
F3.o8.H3H4_kodd|3|9|H3*H4/k(2k-1)|-22207/144 zeta(8) - 31/3 zeta(6) + 427/2 zeta(3)*zeta(5) - 144 zeta(5) + 2 ln2*zeta(3)*zeta(4) - 2 zeta(3)*zeta(4) + 16 ln2*zeta(4) + 4 zeta(4) - 24 zeta(2)*zeta(3)*zeta(3) + 2 zeta(3)*zeta(3) + 64 zeta(2)*zeta(3) + 32 ln2*zeta(3) - 32 zeta(3) - 64 zeta(2) + 256 ln2 - 32 sigma(3) - 2 zeta(4)*sigma(3) - 211/4 tau(6)|expected_pass|third family, order 8 block
F3.o8.H1H6_kodd|3|9|H1*H6/k(2k-1)|-275/24 zeta(8) + 127 ln2*zeta(7) - 127 zeta(7) - 2 ln2*ln2*zeta(6) + 4 ln2*zeta(6) - 7 zeta(6) - 6 zeta(3)*zeta(5) - 62 ln2*zeta(2)*zeta(5) + 62 zeta(2)*zeta(5) - 24 zeta(5) - 14 ln2*zeta(3)*zeta(4) + 14 zeta(3)*zeta(4) - 20 zeta(4) + 1/2 zeta(2)*zeta(3)*zeta(3) + 2 zeta(3)*zeta(3) + 8 zeta(2)*zeta(3) - 64 zeta(3) + 256 ln2 - 128 ln2*ln2 + 2 zeta(4)*sigma(3) + 2 zeta(2)*sigma(5) - 1 sigma(7) + 19/2 tau(6)|expected_pass|third family, order 8 block
AppC.F3.H2H5_kodd|3|9|H2*H5/k(2k-1)|12931/144 zeta(8) + 25/3 zeta(6) - 118 zeta(3)*zeta(5) + 2 ln2*zeta(2)*zeta(5) - 2 zeta(2)*zeta(5) + 8 ln2*zeta(5) + 36 zeta(5) - 28 zeta(4) + 11/2 zeta(2)*zeta(3)*zeta(3) - 6 zeta(3)*zeta(3) - 24 zeta(2)*zeta(3) - 80 zeta(3) + 64 ln2*zeta(2) - 64 zeta(2) + 256 ln2 - 8 sigma(5) - 2 zeta(2)*sigma(5) + 173/4 tau(6)|expected_pass|appendix C, family 3
# ---------------------------------------------------------------- family 4
F4.o4.h1h1_odd2|4|4|h1^2/(2k-1)^2|15/32 zeta(4) + 7/8 ln2*zeta(3) + 3/4 ln2*ln2*zeta(2) - 1/8 sigma(3)|expected_pass|fourth family, order 4
F4.o6.h1h1_odd4|4|6|h1^2/(2k-1)^4|147/512 zeta(6) + 31/32 ln2*zeta(5) + 15/16 ln2*ln2*zeta(4) - 7/64 zeta(3)*zeta(3) - 3/16 ln2*zeta(2)*zeta(3) - 1/32 sigma(5)|expected_pass|fourth family, order 6
F4.o6.h1h2_odd3|4|6|h1*h2/(2k-1)^3|369/1024 zeta(6) + 31/64 ln2*zeta(5) + 9/32 ln2*zeta(2)*zeta(3) - 1/64 sigma(5)|expected_pass|fourth family, order 6
F4.o6.h2h2_odd2|4|6|h2^2/(2k-1)^2|1737/1536 zeta(6) + 7/64 zeta(3)*zeta(3)|expected_pass|fourth family, order 6
F4.o6.h1h3_odd2|4|6|h1*h3/(2k-1)^2|357/1024 zeta(6) + 31/64 ln2*zeta(5) + 35/256 zeta(3)*zeta(3) + 3/8 ln2*zeta(2)*zeta(3) - 1/64 sigma(5)|expected_pass|fourth family, order 6
F4.o8.h1h1_odd6|4|8|h1^2/(2k-1)^6|265/1024 zeta(8) + 127/128 ln2*zeta(7) + 63/64 ln2*ln2*zeta(6) - 19/128 zeta(3)*zeta(5) - 3/64 ln2*zeta(2)*zeta(5) - 15/64 ln2*zeta(3)*zeta(4) + 3/256 zeta(2)*zeta(3)*zeta(3) - 1/128 sigma(7)|expected_pass|fourth family, order 8
F4.o8.h1h5_odd2|4|8|h1*h5/(2k-1)^2|10249/12288 zeta(8) + 127/256 ln2*zeta(7) - 57/128 zeta(3)*zeta(5) + 39/64 ln2*zeta(2)*zeta(5) - 15/64 ln2*zeta(3)*zeta(4) + 3/256 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(7) + 221/1024 tau(6)|expected_pass|fourth family, order 8
F4.o8.h1h4_odd3|4|8|h1*h4/(2k-1)^3|465/1024 zeta(8) + 127/256 ln2*zeta(7) - 19/256 zeta(3)*zeta(5) + 15/64 ln2*zeta(2)*zeta(5) + 15/128 ln2*zeta(3)*zeta(4) - 3/512 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(7)|expected_pass|fourth family, order 8
F4.o8.h2h4_odd2|4|8|h2*h4/(2k-1)^2|221/192 zeta(8) + 3/16 zeta(3)*zeta(5) - 9/256 zeta(2)*zeta(3)*zeta(3) - 17/512 tau(6)|expected_pass|fourth family, order 8
F4.o8.h2h2_odd4.pre|4|8|h2^2/(2k-1)^4|15/8 zeta(4)*S{h2/(2k-1)^2} + 2 S{h2/(2k-1)^6} - 1 S{h4/(2k-1)^4} - 2 S{h2*h4/(2k-1)^2}|expected_pass|fourth family, order 8 (rearranged double sum)
F4.o8.h2h2_odd4|4|8|h2^2/(2k-1)^4|691/1536 zeta(8) + 3/8 zeta(3)*zeta(5) + 9/128 zeta(2)*zeta(3)*zeta(3) - 17/256 tau(6)|expected_pass|fourth family, order 8
F4.o8.h2h3_odd3|4|8|h2*h3/(2k-1)^3|-1505/4096 zeta(8) + 503/512 zeta(3)*zeta(5) + 99/512 zeta(2)*zeta(3)*zeta(3) - 255/1024 tau(6)|expected_pass|fourth family, order 8
F4.o8.h1h3_odd4|4|8|h1*h3/(2k-1)^4|-2659/12288 zeta(8) + 127/256 ln2*zeta(7) + 369/512 zeta(3)*zeta(5) - 15/64 ln2*zeta(2)*zeta(5) + 45/64 ln2*zeta(3)*zeta(4) - 15/256 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(3) - 221/1024 tau(6)|suspect|fourth family, order 8; fails by ~1.1e-3; the trailing odd-harmonic sum is over k^7, not k^3
F4.o8.h1h3_odd4.fix|4|8|h1*h3/(2k-1)^4|-2659/12288 zeta(8) + 127/256 ln2*zeta(7) + 369/512 zeta(3)*zeta(5) - 15/64 ln2*zeta(2)*zeta(5) + 45/64 ln2*zeta(3)*zeta(4) - 15/256 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(7) - 221/1024 tau(6)|expected_pass|fourth family, order 8; corrected form (see the suspect twin)
F4.o8.h1h2_odd5|4|8|h1*h2/(2k-1)^5|141/512 zeta(8) + 127/256 ln2*zeta(7) + 29/256 zeta(3)*zeta(5) - 15/128 ln2*zeta(2)*zeta(5) + 15/64 ln2*zeta(3)*zeta(4) - 15/512 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(7) - 17/512 tau(6)|suspect|fourth family, order 8; fails by ~2.8e-1; sign of the ln2 zeta(2)zeta(5) term; +15/128 verifies
F4.o8.h1h2_odd5.fix|4|8|h1*h2/(2k-1)^5|141/512 zeta(8) + 127/256 ln2*zeta(7) + 29/256 zeta(3)*zeta(5) + 15/128 ln2*zeta(2)*zeta(5) + 15/64 ln2*zeta(3)*zeta(4) - 15/512 zeta(2)*zeta(3)*zeta(3) - 1/256 sigma(7) - 17/512 tau(6)|expected_pass|fourth family, order 8; corrected form (see the suspect twin)
# ---------------------------------------------------------------- family 5
F5.o4.H1h1_odd2|5|4|H1*h1/(2k-1)^2|45/32 zeta(4) + 7/8 ln2*zeta(2)*zeta(3) + 7/8 zeta(3) - 3/2 ln2*ln2*zeta(2) + 3/2 ln2*zeta(2) - 1 zeta(2) - 1/4 sigma(3)|suspect|fifth family, order 4; fails by ~4.7e-1; the 7/8 ln2 term carries no zeta(2) factor
F5.o4.H1h1_odd2.fix|5|4|H1*h1/(2k-1)^2|45/32 zeta(4) + 7/8 ln2*zeta(3) + 7/8 zeta(3) - 3/2 ln2*ln2*zeta(2) + 3/2 ln2*zeta(2) - 1 zeta(2) - 1/4 sigma(3)|expected_pass|fifth family, order 4; corrected form (see the suspect twin)
F5.o6.H1h1_odd4|5|6|H1*h1/(2k-1)^4|405/256 zeta(6) + 93/32 ln2*zeta(5) + 31/32 zeta(5) - 15/8 ln2*ln2*zeta(4) + 15/8 ln2*zeta(4) - 15/16 zeta(4) - 91/128 zeta(3)*zeta(3) - 9/8 ln2*zeta(2)*zeta(3) - 3/16 zeta(2)*zeta(3) - 7/4 ln2*zeta(3) + 7/8 zeta(3) + 3/2 ln2*zeta(2) - 1 zeta(2) + 1/4 sigma(3) - 1/8 sigma(5)|expected_pass|fifth family, order 6
F5.o6.H2h2_odd2|5|6|H2*h2/(2k-1)^2|-705/128 zeta(6) + 15/2 zeta(4) - 161/32 zeta(3)*zeta(3) - 21/2 zeta(3) + 6 ln2*zeta(2) - 1 sigma(3) - 3/4 zeta(2)*sigma(3) + 1/4 sigma(5)|suspect|fifth family, order 6; fails by ~1.5e1; sign of the zeta(3)^2 term; +161/32 verifies
F5.o6.H2h2_odd2.fix|5|6|H2*h2/(2k-1)^2|-705/128 zeta(6) + 15/2 zeta(4) + 161/32 zeta(3)*zeta(3) - 21/2 zeta(3) + 6 ln2*zeta(2) - 1 sigma(3) - 3/4 zeta(2)*sigma(3) + 1/4 sigma(5)|expected_pass|fifth family, order 6; corrected form (see the suspect twin)
F5.o6.H1h3_odd2|5|6|H1*h3/(2k-1)^2|1035/512 zeta(6) - 31/32 ln2*zeta(5) + 31/32 zeta(5) - 75/32 zeta(4) + 7/128 zeta(3)*zeta(3) - 3/4 ln2*zeta(2)*zeta(3) + 3/4 zeta(2)*zeta(3) + 7/4 ln2*zeta(3) - 1/4 sigma(3)|expected_pass|fifth family, order 6
F5.o6.H1h2_odd3|5|6|H1*h2/(2k-1)^3|585/256 zeta(6) - 31/32 ln2*zeta(5) + 31/32 zeta(5) - 75/32 zeta(4) - 105/128 zeta(3)*zeta(3) - 9/16 ln2*zeta(2)*zeta(3) + 9/16 zeta(2)*zeta(3) + 21/8 zeta(3) - 3/2 ln2*zeta(2) + 3/16 zeta(2)*sigma(3)|expected_pass|fifth family, order 6
F5.o6.H2h1_odd3|5|6|H2*h1/(2k-1)^3|-165/32 zeta(6) - 93/8 ln2*zeta(5) + 15/8 zeta(4) + 217/64 zeta(3)*zeta(3) + 49/8 ln2*zeta(2)*zeta(3) + 7/2 ln2*zeta(3) - 21/4 zeta(3) - 6 ln2*zeta(2) + 6 zeta(2) - 1/2 sigma(3) - 1/8 zeta(2)*sigma(3) + 5/8 sigma(5)|expected_pass|fifth family, order 6
F5.o8.H1h2_odd5|5|8|H1*h2/(2k-1)^5|3/16 zeta(8) - 127/128 ln2*zeta(7) + 127/128 zeta(7) - 27/16 zeta(6) + 643/256 zeta(3)*zeta(5) - 15/64 ln2*zeta(2)*zeta(5) + 15/64 zeta(2)*zeta(5) + 31/32 zeta(5) - 15/32 ln2*zeta(3)*zeta(4) + 15/32 zeta(3)*zeta(4) - 75/32 zeta(4) - 21/64 zeta(2)*zeta(3)*zeta(3) - 7/32 zeta(3)*zeta(3) + 9/16 zeta(2)*zeta(3) + 21/8 zeta(3) - 3/2 ln2*zeta(2) + 3/64 zeta(2)*sigma(5) - 153/128 tau(6)|expected_pass|fifth family, order 8
F5.o8.H1h5_odd2|5|8|H1*h5/(2k-1)^2|5853/1024 zeta(8) - 127/128 ln2*zeta(7) + 127/128 zeta(7) - 441/128 zeta(6) - 1077/256 zeta(3)*zeta(5) - 39/32 ln2*zeta(2)*zeta(5) + 39/32 zeta(2)*zeta(5) + 31/16 ln2*zeta(5) + 15/32 ln2*zeta(3)*zeta(4) - 15/32 zeta(3)*zeta(4) + 21/128 zeta(2)*zeta(3)*zeta(3) + 35/64 zeta(3)*zeta(3) - 1/16 sigma(5) + 153/128 tau(6)|expected_pass|fifth family, order 8
AppC.F5.H2h1_odd5|5|8|H2*h1/(2k-1)^5|-363/1024 zeta(8) - 1905/64 ln2*zeta(7) + 63/32 zeta(6) - 101/64 zeta(3)*zeta(5) + 403/32 ln2*zeta(2)*zeta(5) + 31/8 ln2*zeta(5) - 31/5 zeta(5) + 105/16 ln2*zeta(3)*zeta(4) - 15/2 ln2*zeta(4) + 45/8 zeta(4) - 49/64 zeta(2)*zeta(3)*zeta(3) - 7/16 zeta(3)*zeta(3) + 3/4 zeta(2)*zeta(3) + 21/2 ln2*zeta(3) - 35/4 zeta(3) - 12 ln2*zeta(2) + 10 zeta(2) - 3/2 sigma(3) - 1/8 sigma(5) - 1/32 zeta(2)*sigma(5) + 21/64 sigma(7) + 969/256 tau(6)|suspect|appendix C, family 5; fails by ~2.4; the bare zeta(5) coefficient is -31/8, printed -31/5 (integer-relation fit)
AppC.F5.H2h1_odd5.fix|5|8|H2*h1/(2k-1)^5|-363/1024 zeta(8) - 1905/64 ln2*zeta(7) + 63/32 zeta(6) - 101/64 zeta(3)*zeta(5) + 403/32 ln2*zeta(2)*zeta(5) + 31/8 ln2*zeta(5) - 31/8 zeta(5) + 105/16 ln2*zeta(3)*zeta(4) - 15/2 ln2*zeta(4) + 45/8 zeta(4) - 49/64 zeta(2)*zeta(3)*zeta(3) - 7/16 zeta(3)*zeta(3) + 3/4 zeta(2)*zeta(3) + 21/2 ln2*zeta(3) - 35/4 zeta(3) - 12 ln2*zeta(2) + 10 zeta(2) - 3/2 sigma(3) - 1/8 sigma(5) - 1/32 zeta(2)*sigma(5) + 21/64 sigma(7) + 969/256 tau(6)|expected_pass|appendix C, family 5; corrected form (see the suspect twin)
AppC.F5.H1h1_odd6|5|8|H1*h1/(2k-1)^6|1889/1024 zeta(8) + 635/128 ln2*zeta(7) + 127/128 zeta(7) - 63/32 ln2*ln2*zeta(6) + 63/32 ln2*zeta(6) - 63/64 zeta(6) - 349/256 zeta(3)*zeta(5) - 45/32 ln2*zeta(2)*zeta(5) - 3/64 zeta(2)*zeta(5) - 31/16 ln2*zeta(5) + 31/32 zeta(5) - 45/32 ln2*zeta(3)*zeta(4) - 15/64 zeta(3)*zeta(4) + 15/8 ln2*zeta(4) - 15/16 zeta(4) + 21/128 zeta(2)*zeta(3)*zeta(3) + 7/32 zeta(3)*zeta(3) - 3/16 zeta(2)*zeta(3) - 7/4 ln2*zeta(3) + 7/8 zeta(3) + 3/2 ln2*zeta(2) - 1 zeta(2) + 1/4 sigma(3) + 1/16 sigma(5) - 3/64 sigma(7) - 17/256 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H2h3_odd3|5|8|H2*h3/(2k-1)^3|-2743/512 zeta(8) + 63/32 zeta(6) - 51/64 zeta(3)*zeta(5) - 31/2 zeta(5) + 225/16 zeta(4) + 217/128 zeta(2)*zeta(3)*zeta(3) + 49/32 zeta(3)*zeta(3) + 9/4 zeta(2)*zeta(3) - 21/2 ln2*zeta(3) + 3/2 sigma(3) + 3/32 sigma(7) + 289/128 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H5h1_odd2|5|8|H5*h1/(2k-1)^2|-2307/128 zeta(8) + 381/4 ln2*zeta(7) + 395/16 zeta(3)*zeta(5) - 107/2 zeta(2)*zeta(5) + 31 zeta(5) - 7/2 ln2*zeta(3)*zeta(4) + 63/8 zeta(2)*zeta(3)*zeta(3) - 14 zeta(2)*zeta(3) + 70 zeta(3) + 24 ln2*zeta(2) - 80 zeta(2) + 12 sigma(3) + 1/2 zeta(4)*sigma(3) + 1 sigma(5) + 1 zeta(2)*sigma(5) - 21/8 sigma(7) - 969/32 tau(6)|suspect|appendix C, family 5; fails by ~2.8e1; no single-term correction reproduces the sum; left unrepaired
AppC.F5.H4h2_odd2|5|8|H4*h2/(2k-1)^2|-89/128 zeta(8) + 135/24 zeta(6) + 163/8 zeta(3)*zeta(5) - 62 zeta(5) + 105/2 zeta(4) - 287/16 zeta(2)*zeta(3)*zeta(3) - 7/4 zeta(3)*zeta(3) + 35 zeta(2)*zeta(3) - 84 zeta(3) + 48 ln2*zeta(2) - 12 sigma(3) - 2 sigma(5) - 3/2 zeta(2)*sigma(5) + 5/4 sigma(7) + 153/8 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H1h3_odd4|5|8|H1*h3/(2k-1)^4|-883/512 zeta(8) - 127/128 ln2*zeta(7) + 127/128 zeta(7) - 63/64 zeta(6) + 1411/256 zeta(3)*zeta(5) + 15/32 ln2*zeta(2)*zeta(5) - 31/32 zeta(2)*zeta(5) + 31/32 zeta(5) - 45/32 ln2*zeta(3)*zeta(4) + 45/32 zeta(3)*zeta(4) - 75/32 zeta(4) - 105/128 zeta(2)*zeta(3)*zeta(3) - 49/64 zeta(3)*zeta(3) + 3/4 zeta(2)*zeta(3) + 7/4 ln2*zeta(3) - 1/4 sigma(3) - 221/128 tau(6)|suspect|appendix C, family 5; fails by ~8.5e-1; the zeta(2)zeta(5) coefficient is -15/32, printed -31/32 (integer-relation fit)
AppC.F5.H1h3_odd4.fix|5|8|H1*h3/(2k-1)^4|-883/512 zeta(8) - 127/128 ln2*zeta(7) + 127/128 zeta(7) - 63/64 zeta(6) + 1411/256 zeta(3)*zeta(5) + 15/32 ln2*zeta(2)*zeta(5) - 15/32 zeta(2)*zeta(5) + 31/32 zeta(5) - 45/32 ln2*zeta(3)*zeta(4) + 45/32 zeta(3)*zeta(4) - 75/32 zeta(4) - 105/128 zeta(2)*zeta(3)*zeta(3) - 49/64 zeta(3)*zeta(3) + 3/4 zeta(2)*zeta(3) + 7/4 ln2*zeta(3) - 1/4 sigma(3) - 221/128 tau(6)|expected_pass|appendix C, family 5; corrected form (see the suspect twin)
AppC.F5.H1h4_odd3|5|8|H1*h4/(2k-1)^3|3793/512 zeta(8) - 127/128 ln2*zeta(7) + 127/128 zeta(7) - 351/128 zeta(6) - 1845/256 zeta(3)*zeta(5) - 15/32 ln2*zeta(2)*zeta(5) + 15/32 zeta(2)*zeta(5) + 155/32 zeta(5) - 15/64 ln2*zeta(3)*zeta(4) + 15/64 zeta(3)*zeta(4) - 15/8 ln2*zeta(4) + 105/256 zeta(2)*zeta(3)*zeta(3) + 7/32 zeta(3)*zeta(3) - 9/8 zeta(2)*zeta(3) + 15/64 zeta(4)*sigma(3) + 221/128 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H2h2_odd4|5|8|H2*h2/(2k-1)^4|6319/512 zeta(8) + 27/8 zeta(6) - 1291/64 zeta(3)*zeta(5) - 31/8 zeta(5) + 135/8 zeta(4) + 35/32 zeta(2)*zeta(3)*zeta(3) + 7/16 zeta(3)*zeta(3) - 9/4 zeta(2)*zeta(3) - 21 zeta(3) + 12 ln2*zeta(2) - 1 sigma(3) - 3/8 zeta(2)*sigma(5) + 3/32 sigma(7) + 1343/128 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H4h1_odd3|5|8|H4*h1/(2k-1)^3|12597/256 zeta(8) - 1905/16 ln2*zeta(7) - 2207/32 zeta(3)*zeta(5) + 279/4 ln2*zeta(2)*zeta(5) - 31/4 zeta(5) + 7/8 ln2*zeta(3)*zeta(4) + 15/2 zeta(4) - 91/32 zeta(2)*zeta(3)*zeta(3) + 7/2 zeta(2)*zeta(3) + 14 ln2*zeta(3) - 70 zeta(3) - 48 ln2*zeta(2) + 80 zeta(2) - 8 sigma(3) - 1/8 zeta(4)*sigma(3) - 3/4 zeta(4)*sigma(5) + 35/16 sigma(7) + 2669/64 tau(6)|suspect|appendix C, family 5; fails by ~4.4e-1; the zeta(4) in the -3/4 h/k^5 term reads zeta(2)
AppC.F5.H4h1_odd3.fix|5|8|H4*h1/(2k-1)^3|12597/256 zeta(8) - 1905/16 ln2*zeta(7) - 2207/32 zeta(3)*zeta(5) + 279/4 ln2*zeta(2)*zeta(5) - 31/4 zeta(5) + 7/8 ln2*zeta(3)*zeta(4) + 15/2 zeta(4) - 91/32 zeta(2)*zeta(3)*zeta(3) + 7/2 zeta(2)*zeta(3) + 14 ln2*zeta(3) - 70 zeta(3) - 48 ln2*zeta(2) + 80 zeta(2) - 8 sigma(3) - 1/8 zeta(4)*sigma(3) - 3/4 zeta(2)*sigma(5) + 35/16 sigma(7) + 2669/64 tau(6)|expected_pass|appendix C, family 5; corrected form (see the suspect twin)
AppC.F5.H3h1_odd4|5|8|H3*h1/(2k-1)^4|-11257/512 zeta(8) + 635/8 ln2*zeta(7) + 1057/32 zeta(3)*zeta(5) - 341/8 ln2*zeta(2)*zeta(5) + 31/8 zeta(5) - 45/8 ln2*zeta(3)*zeta(4) + 15/2 ln2*zeta(4) - 45/4 zeta(4) + 39/32 zeta(2)*zeta(3)*zeta(3) - 3/4 zeta(2)*zeta(3) - 21 ln2*zeta(3) + 35 zeta(3) + 36 ln2*zeta(2) - 40 zeta(2) + 4 sigma(3) + 1/4 zeta(4)*sigma(5) - 35/32 sigma(7) - 2669/128 tau(6)|suspect|appendix C, family 5; fails by ~1.5e-1; the zeta(4) in the h/k^5 term reads zeta(2)
AppC.F5.H3h1_odd4.fix|5|8|H3*h1/(2k-1)^4|-11257/512 zeta(8) + 635/8 ln2*zeta(7) + 1057/32 zeta(3)*zeta(5) - 341/8 ln2*zeta(2)*zeta(5) + 31/8 zeta(5) - 45/8 ln2*zeta(3)*zeta(4) + 15/2 ln2*zeta(4) - 45/4 zeta(4) + 39/32 zeta(2)*zeta(3)*zeta(3) - 3/4 zeta(2)*zeta(3) - 21 ln2*zeta(3) + 35 zeta(3) + 36 ln2*zeta(2) - 40 zeta(2) + 4 sigma(3) + 1/4 zeta(2)*sigma(5) - 35/32 sigma(7) - 2669/128 tau(6)|expected_pass|appendix C, family 5; corrected form (see the suspect twin)
AppC.F5.H3h2_odd3|5|8|H3*h2/(2k-1)^3|-17909/512 zeta(8) + 1383/32 zeta(3)*zeta(5) + 155/8 zeta(5) - 45 zeta(4) + 221/64 zeta(2)*zeta(3)*zeta(3) - 13/2 zeta(2)*zeta(3) + 63 zeta(3) - 36 ln2*zeta(2) + 6 sigma(3) + 9/8 zeta(2)*sigma(5) - 15/32 sigma(7) - 3553/128 tau(6)|expected_pass|appendix C, family 5
AppC.F5.H3h3_odd2|5|8|H3*h3/(2k-1)^2|20739/512 zeta(8) - 135/16 zeta(6) - 1351/32 zeta(3)*zeta(5) + 403/8 zeta(5) - 225/8 zeta(4) + 97/16 zeta(2)*zeta(3)*zeta(3) + 91/16 zeta(3)*zeta(3) - 18 zeta(2)*zeta(3) + 21 ln2*zeta(3) - 3 sigma(3) + 3/2 sigma(5) - 15/32 sigma(7) + 663/128 tau(6)|suspect|appendix C, family 5; fails by ~7.0; the zeta(3)zeta(5) coefficient is -1531/32, printed -1351/32 (integer-relation fit)
AppC.F5.H3h3_odd2.fix|5|8|H3*h3/(2k-1)^2|20739/512 zeta(8) - 135/16 zeta(6) - 1531/32 zeta(3)*zeta(5) + 403/8 zeta(5) - 225/8 zeta(4) + 97/16 zeta(2)*zeta(3)*zeta(3) + 91/16 zeta(3)*zeta(3) - 18 zeta(2)*zeta(3) + 21 ln2*zeta(3) - 3 sigma(3) + 3/2 sigma(5) - 15/32 sigma(7) + 663/128 tau(6)|expected_pass|appendix C, family 5; corrected form (see the suspect twin)
# ---------------------------------------------------------------- family 6
F6.o4.h1h2_kodd|6|5|h1*h2/k(2k-1)|105/64 zeta(4) + 7/8 ln2*zeta(3) - 3/4 ln2*ln2*zeta(2) - 1/8 sigma(3)|expected_pass|sixth family, order 4
F6.o6.h1h4_kodd|6|7|h1*h4/k(2k-1)|975/512 zeta(6) + 31/32 ln2*zeta(5) - 15/16 ln2*ln2*zeta(4) - 7/32 zeta(3)*zeta(3) + 3/16 ln2*zeta(2)*zeta(3) - 3/16 zeta(2)*sigma(3) - 1/32 zeta(2)*sigma(5)|suspect|sixth family, order 6; fails by ~2.1e-2; the -1/32 h/k^5 term carries no zeta(2) factor
F6.o6.h1h4_kodd.fix|6|7|h1*h4/k(2k-1)|975/512 zeta(6) + 31/32 ln2*zeta(5) - 15/16 ln2*ln2*zeta(4) - 7/32 zeta(3)*zeta(3) + 3/16 ln2*zeta(2)*zeta(3) - 3/16 zeta(2)*sigma(3) - 1/32 sigma(5)|expected_pass|sixth family, order 6; corrected form (see the suspect twin)
F6.o6.h2h3_kodd|6|7|h2*h3/k(2k-1)|1083/512 zeta(6) + 63/128 zeta(3)*zeta(3) - 21/16 ln2*zeta(2)*zeta(3) + 3/16 zeta(2)*sigma(3)|expected_pass|sixth family, order 6
F6.o8.h1h6_kodd|6|9|h1*h6/k(2k-1)|2241/1024 zeta(8) + 127/128 ln2*zeta(7) - 63/64 ln2*ln2*zeta(6) - 67/128 zeta(3)*zeta(5) + 3/64 ln2*zeta(2)*zeta(5) + 15/64 ln2*zeta(3)*zeta(4) - 3/256 zeta(2)*zeta(3)*zeta(3) - 15/64 zeta(4)*sigma(3) - 3/64 zeta(2)*sigma(5) - 1/128 sigma(7) + 17/256 tau(6)|expected_pass|sixth family, order 8
F6.o8.h2h5_kodd|6|9|h2*h5/k(2k-1)|21263/6144 zeta(8) - 47/128 zeta(3)*zeta(5) - 93/64 ln2*zeta(2)*zeta(5) - 33/256 zeta(2)*zeta(3)*zeta(3) + 3/64 zeta(2)*sigma(5) + 187/512 tau(6)|expected_pass|sixth family, order 8
AppC.F6.h3h4_kodd|6|9|h3*h4/k(2k-1)|10321/6144 zeta(8) + 407/256 zeta(3)*zeta(5) - 105/64 ln2*zeta(3)*zeta(4) - 9/32 zeta(2)*zeta(3)*zeta(3) + 15/64 zeta(4)*sigma(3) - 221/512 tau(6)|expected_pass|appendix C, family 6
# ---------------------------------------------------------------- family 7
F7.o4.H2h1_kodd|7|5|H2*h1/k(2k-1)|-25/4 zeta(4) + 7/2 ln2*zeta(3) - 7/2 zeta(3) + 4 zeta(2)|suspect|seventh family, order 4; fails by ~3.4; the zeta(4) coefficient is -25/8, printed -25/4
F7.o4.H2h1_kodd.fix|7|5|H2*h1/k(2k-1)|-25/8 zeta(4) + 7/2 ln2*zeta(3) - 7/2 zeta(3) + 4 zeta(2)|expected_pass|seventh family, order 4; corrected form (see the suspect twin)
F7.o4.H1h2_kodd|7|5|H1*h2/k(2k-1)|15/8 zeta(4) - 35/4 ln2*zeta(3) + 21/4 zeta(3) + 3 ln2*ln2*zeta(2) - 3 ln2*zeta(2) + 3/2 sigma(3)|expected_pass|seventh family, order 4
F7.o6.H4h1_kodd|7|7|H4*h1/k(2k-1)|-439/32 zeta(6) + 31/2 ln2*zeta(5) - 31/2 zeta(5) + 49/8 zeta(3)*zeta(3) - 7 ln2*zeta(2)*zeta(3) + 7 zeta(2)*zeta(3) - 14 zeta(3) - 16 zeta(2) - 4 sigma(3) + 1 zeta(2)*sigma(3) + 1 sigma(5)|suspect|seventh family, order 6; fails by ~5.3e1; sign of the bare zeta(2) term; +16 verifies
F7.o6.H4h1_kodd.fix|7|7|H4*h1/k(2k-1)|-439/32 zeta(6) + 31/2 ln2*zeta(5) - 31/2 zeta(5) + 49/8 zeta(3)*zeta(3) - 7 ln2*zeta(2)*zeta(3) + 7 zeta(2)*zeta(3) - 14 zeta(3) + 16 zeta(2) - 4 sigma(3) + 1 zeta(2)*sigma(3) + 1 sigma(5)|expected_pass|seventh family, order 6; corrected form (see the suspect twin)
F7.o6.H1h4_kodd|7|7|H1*h4/k(2k-1)|465/256 zeta(6) - 279/16 ln2*zeta(5) + 155/16 zeta(5) + 15/4 ln2*ln2*zeta(4) - 15/4 ln2*zeta(4) + 49/64 zeta(3)*zeta(3) + 39/8 ln2*zeta(2)*zeta(3) - 9/4 zeta(2)*zeta(3) - 3/8 zeta(2)*sigma(3) + 3/4 sigma(5)|expected_pass|seventh family, order 6
F7.o6.H2h3_kodd|7|7|H2*h3/k(2k-1)|-735/128 zeta(6) + 93/2 ln2*zeta(5) - 93/4 zeta(5) + 75/8 zeta(4) - 49/32 zeta(3)*zeta(3) - 91/4 ln2*zeta(2)*zeta(3) + 21/2 zeta(2)*zeta(3) - 7 ln2*zeta(3) + 1 sigma(3) + 13/4 zeta(2)*sigma(3) - 7/4 sigma(5)|expected_pass|seventh family, order 6
F7.o8.H2h5_kodd|7|9|H2*h5/k(2k-1)|-29079/512 zeta(8) + 1905/16 ln2*zeta(7) - 1905/32 zeta(7) + 441/32 zeta(5) + 3763/64 zeta(3)*zeta(5) - 775/16 ln2*zeta(2)*zeta(5) + 93/4 zeta(2)*zeta(5) - 31/4 ln2*zeta(5) - 105/4 ln2*zeta(3)*zeta(4) + 105/4 zeta(3)*zeta(4) - 119/64 zeta(2)*zeta(3)*zeta(3) - 35/16 zeta(3)*zeta(3) + 15/4 zeta(4)*sigma(3) + 1/4 sigma(5) + 25/16 zeta(2)*sigma(5) - 39/32 sigma(7) - 2703/128 tau(6)|suspect|seventh family, order 8; fails by ~1.7e1; no single-term correction reproduces the sum; left unrepaired
AppC.F7.H3h4_kodd|7|9|H3*h4/k(2k-1)|28481/256 zeta(8) - 635/2 ln2*zeta(7) + 635/4 zeta(7) - 495/16 zeta(6) - 1793/16 zeta(3)*zeta(5) + 341/2 ln2*zeta(2)*zeta(5) - 341/4 zeta(2)*zeta(5) + 155/4 zeta(5) + 195/8 ln2*zeta(3)*zeta(4) - 105/8 zeta(3)*zeta(4) - 15 ln2*zeta(4) - 1/4 zeta(2)*zeta(3)*zeta(3) + 63/4 zeta(3)*zeta(3) - 9 zeta(2)*zeta(3) - 15/8 zeta(4)*sigma(3) + 2 sigma(5) - 11/2 zeta(2)*sigma(5) + 45/16 sigma(7) + 2227/64 tau(6)|expected_pass|appendix C, family 7
AppC.F7.H4h3_kodd|7|9|H4*h3/k(2k-1)|-17109/128 zeta(8) + 1905/4 ln2*zeta(7) - 1905/8 zeta(7) + 135/4 zeta(6) - 243/2 zeta(3)*zeta(5) - 279 ln2*zeta(2)*zeta(5) + 279/2 zeta(2)*zeta(5) - 93 zeta(5) - 7/4 ln2*zeta(3)*zeta(4) + 75/2 zeta(4) - 91/4 zeta(3)*zeta(3) + 42 zeta(2)*zeta(3) - 28 ln2*zeta(3) + 4 sigma(3) + 1/4 zeta(4)*sigma(3) - 6 sigma(5) + 9 zeta(2)*sigma(5) - 25/8 sigma(7) - 1003/32 tau(6)|suspect|appendix C, family 7; fails by ~3.0e2; sign of the zeta(3)zeta(5) term; +243/2 verifies
AppC.F7.H4h3_kodd.fix|7|9|H4*h3/k(2k-1)|-17109/128 zeta(8) + 1905/4 ln2*zeta(7) - 1905/8 zeta(7) + 135/4 zeta(6) + 243/2 zeta(3)*zeta(5) - 279 ln2*zeta(2)*zeta(5) + 279/2 zeta(2)*zeta(5) - 93 zeta(5) - 7/4 ln2*zeta(3)*zeta(4) + 75/2 zeta(4) - 91/4 zeta(3)*zeta(3) + 42 zeta(2)*zeta(3) - 28 ln2*zeta(3) + 4 sigma(3) + 1/4 zeta(4)*sigma(3) - 6 sigma(5) + 9 zeta(2)*sigma(5) - 25/8 sigma(7) - 1003/32 tau(6)|expected_pass|appendix C, family 7; corrected form (see the suspect twin)
# ---------------------------------------------------------------- family 8
F8.o4.h1h1_k2|8|4|h1^2/k^2|45/16 zeta(4)|expected_pass|eighth family, order 4
F8.o6.h1h2_k3|8|6|h1*h2/k^3|49/8 zeta(3)*zeta(3) - 945/128 zeta(6)|expected_pass|eighth family, order 6
F8.o6.h1h3_k2|8|6|h1*h3/k^2|945/256 zeta(6) - 3/4 zeta(2)*sigma(3)|expected_pass|eighth family, order 6
F8.o6.h2h2_k2|8|6|h2^2/k^2|945/128 zeta(6) - 49/8 zeta(3)*zeta(3) + 3/2 zeta(2)*sigma(3)|expected_pass|eighth family, order 6
F8.o8.h3h3_k2|8|8|h3^2/k^2|2025/256 zeta(8) - 21/8 zeta(2)*zeta(3)*zeta(3)|expected_pass|eighth family, order 8
F8.o8.h1h2_k5|8|8|h1*h2/k^5|651/8 zeta(3)*zeta(5) - 343/16 zeta(2)*zeta(3)*zeta(3) - 1575/32 zeta(8)|expected_pass|eighth family, order 8
F8.o8.h1h5_k2|8|8|h1*h5/k^2|2475/512 zeta(8) - 21/64 zeta(2)*zeta(3)*zeta(3) - 15/16 zeta(4)*sigma(3) - 3/8 zeta(2)*sigma(5)|expected_pass|eighth family, order 8
AppC.F8.h2h3_k3|8|8|h2*h3/k^3|-3375/128 zeta(8) + 651/16 zeta(3)*zeta(5) - 567/64 zeta(2)*zeta(3)*zeta(3) - 9/8 zeta(2)*sigma(5)|expected_pass|appendix C, family 8
AppC.F8.h2h2_k4|8|8|h2^2/k^4|2925/64 zeta(8) - 217/2 zeta(3)*zeta(5) + 287/8 zeta(2)*zeta(3)*zeta(3) + 3 zeta(2)*sigma(5)|expected_pass|appendix C, family 8
AppC.F8.h1h3_k4|8|8|h1*h3/k^4|2475/64 zeta(8) - 651/16 zeta(3)*zeta(5) + 105/16 zeta(2)*zeta(3)*zeta(3) - 3/2 zeta(2)*sigma(5)|expected_pass|appendix C, family 8
AppC.F8.h1h4_k3|8|8|h1*h4/k^3|-4275/256 zeta(8) + 217/16 zeta(3)*zeta(5) - 21/64 zeta(2)*zeta(3)*zeta(3) + 9/8 zeta(2)*sigma(5)|expected_pass|appendix C, family 8
)CATALOG";
}

}  // namespace esum
