// Built-in source text, transcribed from the printed tables.

namespace liecas::data {

extern const char* const kBaseText;
const char* const kBaseText = R"liecas(
# Built-in data in the liecas text format. Everything here is transcribed
# as printed; derived objects (extensions, reconstructions, reconstruction maps)
# are added by dataset.cpp.

algebra sl2
dim 3
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2

algebra so3
dim 3
bracket 1 2 : e3
bracket 1 3 : -e2
bracket 2 3 : e1

algebra aff1
dim 2
bracket 1 2 : e2

algebra aff2
dim 6
bracket 1 2 : 2*e2
bracket 1 3 : -2*e3
bracket 1 4 : e4
bracket 1 5 : -e5
bracket 2 3 : e1
bracket 2 5 : e4
bracket 3 4 : e5
bracket 4 6 : e4
bracket 5 6 : e5

# a-perp of the Type II algebras, printed on e1..e5,e8; e8 is renamed e6.
algebra a_perp
dim 6
bracket 1 2 : 2*e2
bracket 1 3 : -2*e3
bracket 1 4 : e4
bracket 1 5 : -e5
bracket 2 3 : e1
bracket 2 5 : e4
bracket 3 4 : e5
bracket 4 6 : e4
bracket 5 6 : e5

algebra aff2_plus_aff1
dim 8
bracket 1 2 : 2*e2
bracket 1 3 : -2*e3
bracket 1 4 : e4
bracket 1 5 : -e5
bracket 2 3 : e1
bracket 2 5 : e4
bracket 3 4 : e5
bracket 4 6 : e4
bracket 5 6 : e5
bracket 7 8 : e8

algebra aff2_plus_R2
dim 8
bracket 1 2 : 2*e2
bracket 1 3 : -2*e3
bracket 1 4 : e4
bracket 1 5 : -e5
bracket 2 3 : e1
bracket 2 5 : e4
bracket 3 4 : e5
bracket 4 6 : e4
bracket 5 6 : e5

algebra sl2_R
dim 4
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2

algebra so3_R
dim 4
bracket 1 2 : e3
bracket 1 3 : -e2
bracket 2 3 : e1

# Vector-space carrier for forms whose algebra needs external brackets.
algebra R8
dim 8

# Lie brackets of h + h* exactly as tabulated (f_k written e_k).
algebra g_rho1_printed
dim 8
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2
bracket 1 5 : -1/2*e6 + e7 - e8
bracket 1 7 : -1/2*e6
bracket 1 8 : -1/2*e6
bracket 2 5 : -1/2*e5 + 1/2*e8
bracket 2 6 : -e7 - e8
bracket 2 7 : 1/2*e5 - 1/2*e8
bracket 2 8 : -1/2*e5 + 1/2*e8
bracket 3 5 : -e5 - e7 + e8
bracket 3 6 : e6
bracket 3 7 : -e8
bracket 3 8 : -e7
bracket 4 5 : -e5 + 1/2*e6 + e7 + e8
bracket 4 6 : -e6
bracket 4 7 : -1/2*e6 - e7
bracket 5 8 : 1/2*e6 - e8

algebra g_rho2_printed
dim 8
params lam
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2
bracket 1 5 : e7 - (1+lam)*e8
bracket 1 7 : -(1+lam)/2*e6
bracket 1 8 : -1/2*e6
bracket 2 6 : -e7 - (1-lam)*e8
bracket 2 7 : (1-lam)/2*e5
bracket 2 8 : -1/2*e5
bracket 3 5 : -e5
bracket 3 6 : e6
bracket 3 7 : -lam*e7 - (1-lam^2)*e8
bracket 3 8 : -e7 + lam*e8
bracket 4 5 : -(1+lam)*e5
bracket 4 6 : (lam-1)*e6
bracket 4 7 : (lam^2-1)*e7 + lam*(1-lam^2)*e8
bracket 4 8 : lam*e7 - (1+lam^2)*e8

algebra g_rho3_printed
dim 8
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2
bracket 1 5 : e7 - e8
bracket 1 7 : -3*e5
bracket 1 8 : -3*e5 - 3*e6
bracket 2 5 : -e7
bracket 2 6 : e7 - e8
bracket 2 7 : e5 + 1/4*e6
bracket 2 8 : -3*e5 - 3/4*e6
bracket 3 5 : -e5 - e6
bracket 3 6 : 3*e6
bracket 3 7 : -2*e7 - e8
bracket 3 8 : -3*e7
bracket 4 5 : -e5
bracket 4 6 : -e6
bracket 4 7 : -e7
bracket 4 8 : -e8

algebra g_rho4_printed
dim 8
params nu
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2
bracket 1 5 : -1/2*e6 + e7 + (-1+nu/2)*e8
bracket 1 6 : -nu/2*e6 + nu^2/2*e8
bracket 1 7 : -1/2*e6 + nu/2*e8
bracket 1 8 : -1/2*e6 + nu/2*e8
bracket 2 5 : -1/2*e5 + 1/2*e8
bracket 2 6 : -nu/2*e5 - e7 + (-1+nu/2)*e8
bracket 2 7 : 1/2*e5 - 1/2*e8
bracket 2 8 : -1/2*e5 + 1/2*e8
bracket 3 5 : -e5 - e7 + e8
bracket 3 6 : e6 - nu*e7 - nu*e8
bracket 3 7 : -e8
bracket 3 8 : -e7
bracket 4 5 : (-1+nu/2)*e5 + 1/2*e6 + e7 + (1-nu)*e8
bracket 4 6 : nu^2/2*e5 + (-1+nu/2)*e6 - nu*e7 + nu*(1-nu)*e8
bracket 4 7 : nu/2*e5 - 1/2*e6 - e7
bracket 4 8 : nu/2*e5 + 1/2*e6 - (nu+1)*e8

algebra g_rho5_printed
dim 8
params mu
bracket 1 2 : e3
bracket 1 3 : -e2
bracket 2 3 : e1
bracket 1 5 : mu/4*e5 - (mu^2/4+1)*e8
bracket 1 6 : 1/2*e7
bracket 1 7 : -1/2*e6
bracket 2 5 : mu/4*e6 - 1/2*e7
bracket 2 6 : -e8
bracket 2 7 : 1/2*e5 - mu/2*e8
bracket 2 8 : 1/4*e6
bracket 3 5 : 1/2*e6 + mu/4*e7
bracket 3 6 : -1/2*e5 + mu/2*e8
bracket 3 7 : -e8
bracket 3 8 : 1/4*e7
bracket 4 5 : -(mu^2/4+1)*e5 + mu*(mu^2+4)/4*e8
bracket 4 6 : -e6 + mu/2*e7
bracket 4 7 : -mu/2*e6 - e7
bracket 4 8 : -mu/4*e5 + (-1+mu^2/4)*e8

algebra g_rho6_printed
dim 8
bracket 1 2 : e3
bracket 1 3 : -e2
bracket 2 3 : e1
bracket 1 5 : -e8
bracket 1 6 : 1/2*e7
bracket 1 7 : -1/2*e6
bracket 1 8 : 1/4*e5
bracket 2 5 : -1/2*e7
bracket 2 6 : -e8
bracket 2 7 : 1/2*e5
bracket 2 8 : 1/4*e6
bracket 3 5 : 1/2*e6
bracket 3 6 : -1/2*e5
bracket 3 7 : -e8
bracket 3 8 : 1/4*e7
bracket 4 5 : -e5
bracket 4 6 : -e6
bracket 4 7 : -e7
bracket 4 8 : -e8

# Left-symmetric products on s + R e4.
lsa h1
dim 4
over sl2_R
prod 1 2 : 1/2*e1 + 1/2*e3 + 1/2*e4
prod 1 3 : -e1
prod 1 4 : e1
prod 2 1 : 1/2*e1 - 1/2*e3 + 1/2*e4
prod 2 3 : e2
prod 2 4 : -1/2*e1 + e2 + 1/2*e3 - 1/2*e4
prod 3 1 : e1
prod 3 2 : -e2
prod 3 3 : e1 + e4
prod 3 4 : -e1 + e3
prod 4 1 : e1
prod 4 2 : -1/2*e1 + e2 + 1/2*e3 - 1/2*e4
prod 4 3 : -e1 + e3
prod 4 4 : -e1 + e4

lsa h2
dim 4
params lam
over sl2_R
prod 1 2 : (1+lam)/2*e3 + 1/2*e4
prod 1 3 : -e1
prod 1 4 : (1+lam)*e1
prod 2 1 : (lam-1)/2*e3 + 1/2*e4
prod 2 3 : e2
prod 2 4 : (1-lam)*e2
prod 3 1 : e1
prod 3 2 : -e2
prod 3 3 : lam*e3 + e4
prod 3 4 : (1-lam^2)*e3 - lam*e4
prod 4 1 : (1+lam)*e1
prod 4 2 : (1-lam)*e2
prod 4 3 : (1-lam^2)*e3 - lam*e4
prod 4 4 : lam*(lam^2-1)*e3 + (1+lam^2)*e4

lsa h3
dim 4
over sl2_R
prod 1 1 : 3*e3 + 3*e4
prod 1 2 : 3*e4
prod 1 3 : -e1
prod 1 4 : e1
prod 2 1 : -e3 + 3*e4
prod 2 2 : -1/4*e3 + 3/4*e4
prod 2 3 : e1 - e2
prod 2 4 : e2
prod 3 1 : e1
prod 3 2 : e1 - 3*e2
prod 3 3 : 2*e3 + 3*e4
prod 3 4 : e3
prod 4 1 : e1
prod 4 2 : e2
prod 4 3 : e3
prod 4 4 : e4

lsa h4
dim 4
params nu
over sl2_R
prod 1 2 : 1/2*e1 + nu/2*e2 + 1/2*e3 + 1/2*e4
prod 1 3 : -e1
prod 1 4 : (1-nu/2)*e1 - nu^2/2*e2 - nu/2*e3 - nu/2*e4
prod 2 1 : 1/2*e1 + nu/2*e2 - 1/2*e3 + 1/2*e4
prod 2 3 : e2
prod 2 4 : -1/2*e1 + (1-nu/2)*e2 + 1/2*e3 - 1/2*e4
prod 3 1 : e1
prod 3 2 : -e2
prod 3 3 : e1 + nu*e2 + e4
prod 3 4 : -e1 + nu*e2 + e3
prod 4 1 : (1-nu/2)*e1 - nu^2/2*e2 - nu/2*e3 - nu/2*e4
prod 4 2 : -1/2*e1 + (1-nu/2)*e2 + 1/2*e3 - 1/2*e4
prod 4 3 : -e1 + nu*e2 + e3
prod 4 4 : (nu-1)*e1 + nu*(nu-1)*e2 + (nu+1)*e4

lsa h5
dim 4
params mu
over so3_R
prod 1 1 : -mu/4*e1 - 1/4*e4
prod 1 2 : 1/2*e3
prod 1 3 : -1/2*e2
prod 1 4 : (mu^2/4+1)*e1 + mu/4*e4
prod 2 1 : -1/2*e3
prod 2 2 : -mu/4*e1 - 1/4*e4
prod 2 3 : 1/2*e1
prod 2 4 : e2 + mu/2*e3
prod 3 1 : 1/2*e2
prod 3 2 : -1/2*e1
prod 3 3 : -mu/4*e1 - 1/4*e4
prod 3 4 : -mu/2*e2 + e3
prod 4 1 : (mu^2/4+1)*e1 + mu/4*e4
prod 4 2 : e2 + mu/2*e3
prod 4 3 : -mu/2*e2 + e3
prod 4 4 : -mu*(mu^2+4)/4*e1 + (1-mu^2/4)*e4

lsa h6
dim 4
over so3_R
prod 1 1 : -1/4*e4
prod 1 2 : 1/2*e3
prod 1 3 : -1/2*e2
prod 1 4 : e1
prod 2 1 : -1/2*e3
prod 2 2 : -1/4*e4
prod 2 3 : 1/2*e1
prod 2 4 : e2
prod 3 1 : 1/2*e2
prod 3 2 : -1/2*e1
prod 3 3 : -1/4*e4
prod 3 4 : e3
prod 4 1 : e1
prod 4 2 : e2
prod 4 3 : e3
prod 4 4 : e4

# Automorphisms of a-perp; the printed matrices act on column vectors.
map phi1 from a_perp to a_perp
params a12 a13 a23 a25 a34
image 1 : (-1)*e1 + (-2*a34/a25)*e2 + ((3*a12*a34 + 2*a23*a25)/(2*a25^2))*e4 + (-a12/(2*a25))*e5
image 2 : (a25*a34/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e1 + (a34^2/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e2 + (-a25^2/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e3 + (-a34*(a12*a34 + a23*a25)/(a25*(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)))*e4 + ((a12*a34 + a23*a25)/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e5
image 3 : (-(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)/a25^2)*e2 + (a12*(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)/(2*a25^3))*e4
image 4 : (-a34/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e4 + (a25/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e5
image 5 : (-1/a25)*e4
image 6 : ((a12*a34 + 2*a23*a25)/(2*a25^2))*e4 + (a12/(2*a25))*e5 + (1)*e6

map phi2 from a_perp to a_perp
params a12 a13 a23 a34
image 1 : (-1)*e1 + (-a13/(2*a34))*e4 + (a23/a34)*e5
image 2 : (-a12)*e3 + (-a12*a13/(2*a34))*e5
image 3 : (-1/a12)*e2 + (-a23/(a12*a34))*e4
image 4 : (1/a34)*e5
image 5 : (-1/(a12*a34))*e4
image 6 : (-a13/(2*a34))*e4 + (-a23/a34)*e5 + (1)*e6

map phi3 from a_perp to a_perp
image 1 : (-1)*e1
image 2 : (-1)*e3
image 3 : (-1)*e2
image 4 : (1)*e5
image 5 : (-1)*e4
image 6 : (1)*e6

map Psi1 from R8 to R8
params a12 a13 a23 a25 a34 a67 a68 a78 a b
image 1 : (-1)*e1 + (-2*a34/a25)*e2 + ((3*a12*a34 + 2*a23*a25)/(2*a25^2))*e4 + (-a12/(2*a25))*e5
image 2 : (a25*a34/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e1 + (a34^2/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e2 + (-a25^2/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e3 + (-a34*(a12*a34 + a23*a25)/(a25*(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)))*e4 + ((a12*a34 + a23*a25)/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e5
image 3 : (-(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)/a25^2)*e2 + (a12*(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34)/(2*a25^3))*e4
image 4 : (-a34/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e4 + (a25/(a12*a34^2 + a13*a25^2 + 2*a23*a25*a34))*e5
image 5 : (-1/a25)*e4
image 6 : ((a12*a34 + 2*a23*a25)/(2*a25^2))*e4 + (a12/(2*a25))*e5 + (1)*e6 + (-a68/a78)*e7 + (a67/a78)*e8
image 7 : (a)*e7 + (b)*e8
image 8 : (a)*e8

# Coboundary primitives phi with d phi = alpha, in the symbols A<ij>_<k> for
# the f_k-coefficient of alpha(f_i, f_j). phi_h2 is the one given for h2 in
# the main text; the others come from the appendix.
cochain phi_h1 on h1
params A13_6 A14_6 A14_8 A23_7 A24_5 A24_6 A34_6 A34_7 A34_8
image 1 : (-A14_8)*e5 + (A23_7/4 + 3*A24_5/4 + 3*A34_6/4 - 3*A34_7/8)*e6 + (-A13_6 + A14_6 - A14_8/2 - A34_7/2 + A34_8/2)*e7 + (-A13_6 + A14_6 - A14_8/2 - A34_7/2 + 3*A34_8/2)*e8
image 2 : (A23_7/4 + 3*A24_5/4 + 3*A34_6/4 - 3*A34_7/8)*e5 + (A23_7/4 + A24_5/4 + A24_6 + A34_6/4 - A34_7/8)*e6 + (-A23_7/4 + A24_5/4 + A34_6/4 - A34_7/8)*e7
image 3 : (-A13_6 + A14_6 - A14_8/2 - A34_7/2 + A34_8/2)*e5 + (-A23_7/4 + A24_5/4 + A34_6/4 - A34_7/8)*e6 + (-A13_6 + A23_7/2 + A24_5/2 + 3*A34_6/2 - A34_7/4)*e7 + (-A14_6 + A14_8/2 + A24_5 - A34_8/2)*e8
image 4 : (-A13_6 + A14_6 - A14_8/2 - A34_7/2 + 3*A34_8/2)*e5 + (-A14_6 + A14_8/2 + A24_5 - A34_8/2)*e7 + (A13_6 - 2*A14_6 + A14_8 + A23_7/2 + A24_5/2 + 3*A34_6/2 - A34_7/4 - 2*A34_8)*e8

cochain phi_h2 on h2
params A13_5 A14_5 A14_6 A24_5 A24_6 A24_7 A34_5 A34_6 A34_7
image 1 : (A24_5/3)*e5 + (-A14_5/3 + A24_7/6)*e7 + (A14_5*lam/3 + A14_5 - A24_7*lam/6 + A24_7/2)*e8
image 2 : (-A34_6/3)*e6 + (-A14_6/3 - A34_7/6)*e7 + (A14_6*lam/3 - A14_6 + A34_7*lam/6 + A34_7/2)*e8
image 3 : (-A14_5/3 + A24_7/6)*e5 + (-A14_6/3 - A34_7/6)*e6 + (-A24_6 + A34_5)*e7 + (A24_6*lam - A24_6 - A34_5*lam - A34_5)*e8
image 4 : (A14_5*lam/3 + A14_5 - A24_7*lam/6 + A24_7/2)*e5 + (A14_6*lam/3 - A14_6 + A34_7*lam/6 + A34_7/2)*e6 + (A24_6*lam - A24_6 - A34_5*lam - A34_5)*e7 + (-2*A13_5 - A24_6*lam^2 + 2*A24_6*lam - A24_6 + A34_5*lam^2 - A34_5)*e8

cochain phi_h3 on h3
params A12_6 A14_5 A14_6 A23_6 A24_5 A24_6 A34_5 A34_6
image 1 : (A14_5 - 4*A14_6 + 4*A24_5 - 4*A24_6)*e5 + (A24_5 - 4*A24_6)*e6 + (-2*A12_6 + A34_5/2 - 2*A34_6)*e7 + (-2*A12_6 - A34_5/2 - 2*A34_6)*e8
image 2 : (A24_5 - 4*A24_6)*e5 + (-2*A12_6 + 3*A24_6/2 - A34_5/2 - 5*A34_6/2)*e7 + (-A24_6/2 + A34_6/2)*e8
image 3 : (-2*A12_6 + A34_5/2 - 2*A34_6)*e5 + (-2*A12_6 + 3*A24_6/2 - A34_5/2 - 5*A34_6/2)*e6 + (-3*A14_6 + 4*A23_6 - A24_5 + 16*A24_6)*e7 + (-A14_6 + A24_5)*e8
image 4 : (-2*A12_6 - A34_5/2 - 2*A34_6)*e5 + (-A24_6/2 + A34_6/2)*e6 + (-A14_6 + A24_5)*e7 + (-A14_6/3 + A24_5/3 - 4*A24_6/3)*e8

cochain phi_h4 on h4
params A12_6 A13_5 A13_6 A13_8 A14_6 A23_6 A24_6 A34_5 A34_7
image 1 : (A13_5/3)*e5 + (-A12_6/2 + A23_6*nu/3 - A23_6/2 - 3*A24_6/2)*e6 + (A13_5/6 - A13_6*nu/2 + A13_8/2 + A34_5)*e7 + (A12_6*nu/2 + A13_5/6 + A13_6*nu/2 + A13_8/2 - A23_6*nu^2/3 + A23_6*nu/2 + 3*A24_6*nu/2)*e8
image 2 : (-A12_6/2 + A23_6*nu/3 - A23_6/2 - 3*A24_6/2)*e5 + (-A23_6/3)*e6 + (-A12_6/2 + A23_6/6 + A24_6/2)*e7
image 3 : (A13_5/6 - A13_6*nu/2 + A13_8/2 + A34_5)*e5 + (-A12_6/2 + A23_6/6 + A24_6/2)*e6 + (-A13_6 + A23_6*nu/3 - 2*A23_6/3 - 2*A24_6 + A34_7)*e7 + (A12_6*nu/2 - A12_6 - A13_5/6 + A13_6*nu/2 - A13_6 - A13_8/2 + A23_6*nu/6 - A23_6/3 - A24_6*nu/2 - A24_6 - A34_5 - A34_7)*e8
image 4 : (A12_6*nu/2 + A13_5/6 + A13_6*nu/2 + A13_8/2 - A23_6*nu^2/3 + A23_6*nu/2 + 3*A24_6*nu/2)*e5 + (A12_6*nu/2 - A12_6 - A13_5/6 + A13_6*nu/2 - A13_6 - A13_8/2 + A23_6*nu/6 - A23_6/3 - A24_6*nu/2 - A24_6 - A34_5 - A34_7)*e7 + (-A12_6*nu - A13_5/3 - 2*A13_6*nu + A13_6 - 2*A14_6 + A23_6*nu^2/3 - 2*A23_6/3 - A24_6*nu - 2*A24_6 + 2*A34_5 + A34_7)*e8

cochain phi_h5 on h5
params A12_6 A13_5 A13_6 A13_8 A14_5 A14_6 A23_5 A23_7 A34_6
image 1 : (2*A13_6/3 - 4*A23_5/3)*e5 + (A13_5*mu^2/24 + A13_5/2 + A13_8*mu/24 + A14_6/4 + A23_7*mu/6)*e6 + (-A13_5*mu/6 - A13_8/6 - 2*A23_7/3)*e7 + (2*A12_6 + A13_6*mu/3 - 2*A23_5*mu/3 + 3*A34_6)*e8
image 2 : (A13_5*mu^2/24 + A13_5/2 + A13_8*mu/24 + A14_6/4 + A23_7*mu/6)*e5 + (4*A13_6/3 - 2*A23_5/3)*e6 + (-A12_6 - A13_6*mu/6 + A23_5*mu/3 - A34_6/2)*e7 + (-A13_5*mu^3/24 + A13_5*mu/2 - A13_8*mu^2/24 + A13_8 - A14_6*mu/4 - A23_7*mu^2/6)*e8
image 3 : (-A13_5*mu/6 - A13_8/6 - 2*A23_7/3)*e5 + (-A12_6 - A13_6*mu/6 + A23_5*mu/3 - A34_6/2)*e6 + (-A13_5*mu^2/12 + A13_5 - A13_8*mu/12 - 3*A14_6/2 - A23_7*mu/3)*e8
image 4 : (2*A12_6 + A13_6*mu/3 - 2*A23_5*mu/3 + 3*A34_6)*e5 + (-A13_5*mu^3/24 + A13_5*mu/2 - A13_8*mu^2/24 + A13_8 - A14_6*mu/4 - A23_7*mu^2/6)*e6 + (-A13_5*mu^2/12 + A13_5 - A13_8*mu/12 - 3*A14_6/2 - A23_7*mu/3)*e7 + (-4*A12_6*mu - 4*A13_6*mu^2/3 - 8*A13_6/3 + 4*A14_5 + 8*A23_5*mu^2/3 + 16*A23_5/3 - 6*A34_6*mu)*e8

cochain phi_h6 on h6
params A13_6 A13_7 A14_6 A14_7 A23_6 A23_7 A24_6 A24_7 A34_7
image 1 : (-2*A13_6 + 2*A24_6 - 2*A34_7)*e5 + (-A14_6/2 - A23_6)*e6 + (-A14_7/2 - A23_7)*e7 + (2*A13_7 - 3*A24_7)*e8
image 2 : (-A14_6/2 - A23_6)*e5 + (A24_6 - A34_7)*e6 + (A13_7 - A24_7/2)*e7 + (3*A14_7 + 2*A23_7)*e8
image 3 : (-A14_7/2 - A23_7)*e5 + (A13_7 - A24_7/2)*e6 + (-3*A14_6 - 2*A23_6)*e8
image 4 : (2*A13_7 - 3*A24_7)*e5 + (3*A14_7 + 2*A23_7)*e6 + (-3*A14_6 - 2*A23_6)*e7 + (4*A34_7)*e8


form omega_aff2 on aff2 : e1^e2 + e1^e5 - e3^e4 - e5^e6
form omega_aff2_plus_aff1 on aff2_plus_aff1 : e1^e2 + e1^e5 - e3^e4 - e5^e6 + e7^e8
form omega_aff2_plus_R2 on aff2_plus_R2 : e1^e2 + e1^e5 - e3^e4 - e5^e6 + e7^e8
form omega_a_perp on a_perp : e1^e2 + e1^e5 - e3^e4 - e5^e6
form omega_a_perp_general on a_perp params a12 a13 a23 a25 a34 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a25*e1^e4 + a25*e2^e5 + a25*e4^e6 - a34*e1^e5 + a34*e3^e4 + a34*e5^e6
form omega_a_perp_a25_0 on a_perp params a12 a13 a23 a34 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 - a34*e1^e5 + a34*e3^e4 + a34*e5^e6
form omega1_a_perp on a_perp : e1^e3 + e1^e4 + e2^e5 + e4^e6
# Type II general form as printed (a78*e7^e8 appears twice) and with the
# second copy read as a67*e6^e7, basis a-perp = e1..e6, a = e7,e8.
form omega_typeII_printed on R8 params a12 a13 a23 a25 a34 a68 a78 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a78*e7^e8 + a68*e6^e8 + a78*e7^e8 + a25*e1^e4 + a25*e2^e5 + a25*e4^e6 - a34*e1^e5 + a34*e5^e6 + a34*e3^e4
form omega_typeII on R8 params a12 a13 a23 a25 a34 a67 a68 a78 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a67*e6^e7 + a68*e6^e8 + a78*e7^e8 + a25*e1^e4 + a25*e2^e5 + a25*e4^e6 - a34*e1^e5 + a34*e5^e6 + a34*e3^e4
form Omega0_typeII on R8 params a a78 : e1^e2 + e1^e5 - e3^e4 - e5^e6 + a^2*a78*e7^e8
# Non-Frobeniusian forms, stored without brackets.
form omega_plus_L8_7_8_9 on R8 : e1^e2 + e1^e5 - e3^e8 - e5^e6 - e6^e7
form omega_minus_L8_7_8_9 on R8 : e1^e2 + e1^e5 - e3^e8 - e5^e6 + e6^e7
form omega_plus_typeII_normal on R8 : e1^e2 + e1^e5 - e3^e4 - e5^e8 - e6^e7
form omega_minus_typeII_normal on R8 : e1^e2 + e1^e5 - e3^e4 - e5^e8 + e6^e7
form family_L8_7 on R8 params a12 a13 a23 a67 a68 a78 a48 a58 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a67*e6^e7 + a68*e6^e8 + a78*e7^e8 + a48*e1^e4 + a48*e2^e5 + a48*e4^e8 - a58*e1^e5 + a58*e3^e4 + a58*e5^e8
form family_L8_8 on R8 params a12 a13 a23 a67 a68 a78 a25 a34 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a67*e6^e7 + a68*e6^e8 + a78*e7^e8 + a25*e1^e4 + a25*e2^e5 + a25*e4^e8 - a34*e1^e5 + a34*e3^e4 + a34*e5^e8
form family_L8_9 on R8 params a12 a13 a23 a67 a68 a78 a48 a58 : a12*e1^e2 + a13*e1^e3 + a23*e2^e3 + a67*e6^e7 + a68*e6^e8 + a78*e7^e8 + a48*e2^e4 + a48*e2^e5 + a48*e4^e8 - a58*e1^e5 + a58*e5^e8 + a58*e3^e4
)liecas";

}  // namespace liecas::data
