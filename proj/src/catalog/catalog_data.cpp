#include "catalog_data.hpp"

namespace ppsym::data {

namespace {

constexpr auto KV = ConformalKind::Killing;
constexpr auto HV = ConformalKind::Homothetic;
constexpr auto SC = ConformalKind::SpecialConformal;
constexpr auto PC = ConformalKind::ProperConformal;

const char* const kDtheta = "[0, 0, -z, y]";
const char* const kDu = "[1, 0, 0, 0]";

GenText k_field() { return {"k", "", "[0, 1, 0, 0]", "", KV}; }

GenText gen(std::string name, std::string origin, std::string printed, ConformalKind kind = KV) {
  GenText g;
  g.name = std::move(name);
  g.origin = std::move(origin);
  g.printed = std::move(printed);
  g.kind = kind;
  return g;
}

GenText amended(GenText g, std::string corrected, std::string note) {
  g.corrected = std::move(corrected);
  g.note = std::move(note);
  return g;
}

GenText with_psi(GenText g, std::string psi, std::string corrected_psi = "", std::string note = "") {
  g.psi = std::move(psi);
  g.corrected_psi = std::move(corrected_psi);
  if (!note.empty()) g.note = std::move(note);
  return g;
}

void add_params(ClassText& c, std::initializer_list<std::pair<std::string, std::string>> ps) {
  for (const auto& p : ps) c.params.push_back(p);
}

// Common data of the plane-wave classes: H from A, B, C, four KVs X_a built from (d_a, e_a), k and H_6.
void plane_wave(ClassText& c, const std::string& A, const std::string& B, const std::string& C, bool closed_form,
                bool record_printed_rules) {
  c.defs.push_back({"Acoef", A});
  c.defs.push_back({"Bcoef", B});
  c.defs.push_back({"Ccoef", C});
  c.H = "(Acoef*y^2 + Ccoef*z^2)/2 + Bcoef*y*z";
  for (int a = 1; a <= 4; ++a) {
    std::string d = "d" + std::to_string(a), e = "e" + std::to_string(a);
    c.functions[d] = 1;
    c.functions[e] = 1;
    if (!closed_form) {
      RuleText rd{d, "-(Acoef*" + d + "(u) + Bcoef*" + e + "(u))", ""};
      RuleText re{e, "-(Bcoef*" + d + "(u) + Ccoef*" + e + "(u))", ""};
      if (record_printed_rules) {
        rd.printed = "-(Ccoef*" + d + "(u) + Bcoef*" + e + "(u))";
        re.printed = "-(Bcoef*" + d + "(u) + Acoef*" + e + "(u))";
      }
      c.rules.push_back(rd);
      c.rules.push_back(re);
    }
  }
  if (closed_form) c.plane_wave_constant = {A, B, C};
  c.shared_jets = !closed_form;
  c.gens.push_back(k_field());
  for (int a = 1; a <= 4; ++a) {
    std::string d = "d" + std::to_string(a), e = "e" + std::to_string(a);
    GenText g = gen("Xa" + std::to_string(a), "10",
                    "[0, y*Derivative[1](" + d + ")(u) + z*Derivative[1](" + e + ")(u), " + d + "(u), " + e + "(u)]");
    g.printed_rules = record_printed_rules;
    if (record_printed_rules)
      g.note = "the printed system d'' + C d + B e = 0, e'' + A e + B d = 0 has A and C exchanged; with "
               "H = (A y^2 + C z^2)/2 + B y z the Killing equations require d'' = -(A d + B e), e'' = -(B d + C e)";
    c.gens.push_back(g);
  }
  GenText h6 = gen("H6", "10", "[0, 2*v, y, z]", HV);
  if (c.id == "10") h6 = with_psi(h6, "0", "1", "L_H g = 2g for every quadratic H, so the factor is 1 and not 0");
  c.gens.push_back(h6);
  c.coms.push_back({"k", "H6", "2*k"});
  for (int a = 1; a <= 4; ++a) {
    std::string xa = "Xa" + std::to_string(a);
    c.coms.push_back({"k", xa, "0"});
    c.coms.push_back({xa, "H6", xa});
    for (int b = a + 1; b <= 4; ++b)
      c.coms.push_back({xa, "Xa" + std::to_string(b), "2*Q" + std::to_string(a) + std::to_string(b) + "*k"});
  }
}

std::vector<ClassText> build() {
  std::vector<ClassText> all;

  // ---- class 1 ---------------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "1";
    c.title = "H(u, y, z) arbitrary";
    c.functions = {{"H", 3}};
    c.H = "H(u, y, z)";
    c.gens = {k_field()};
    c.fams = {{"V_G", "k:1", "V(u, y, z)", "", "printed as V(u, x, y); read in the chart (u, v, y, z)"}};
    c.t5 = 1;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "1i";
    c.title = "H(u, z)";
    c.functions = {{"H", 2}};
    c.H = "H(u, z)";
    c.gens = {k_field(), gen("X2", "1i", "[0, 0, 1, 0]"), gen("X3", "1i", "[0, y, u, 0]")};
    c.fams = {{"V_2", "X2:1", "V(u, v, z)"},
              {"V_3", "X3:1", "V(u, z, y^2 - 2*u*v)", "", "printed as V(u, x, y^2 - 2uv); x read as z"},
              {"V_G", "k:c1, X2:c2, X3:c3", "V(u, z, (2*c1*y - 2*c2*v + c3*(y^2 - 2*u*v))/(2*(c2 + c3*u)))", "",
               "printed without the outer V and with x for z"}};
    c.coms = {{"X2", "X3", "k"}};
    c.t5 = 2;
    c.t5c = 3;
    c.t5note = "k, X_2 and X_3 are all Killing and X_3 lifts like any KV; the row lists only k and X_2";
    all.push_back(c);
  }

  // ---- class 2 ---------------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "2";
    c.title = "H(u, r)";
    c.functions = {{"W", 2}};
    c.H = "W(u, r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta)};
    c.fams = {{"V_2", "k:c1, X2:c2", "V(u, r, theta - c2/c1*v)"}};
    c.t5 = 2;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "2i";
    c.title = "H = K (alpha u + beta)^q ln r, q != -1";
    add_params(c, {{"K", "7/10"}, {"alpha", "1"}, {"beta", "1/2"}, {"q", "1"}});
    c.constraints = {"K != 0", "alpha != 0", "q + 1 != 0", "q + 2 != 0"};
    c.defs = {{"w", "alpha*u + beta"}, {"pf", "2/(2*alpha + alpha*q)"}};
    c.H = "K*w^q*ln(r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta),
              with_psi(amended(gen("H3", "2i",
                                   "[pf*w, pf*(alpha*(q+q)*v - (q+2)/(2*(q+1))*K*w^(q+1)), pf*(2+q)/2*alpha*y, "
                                   "pf*(2+q)/2*alpha*z]",
                                   HV),
                               "[pf*w, pf*(alpha*(q+1)*v - (q+2)/(2*(q+1))*K*w^(q+1)), pf*(2+q)/2*alpha*y, "
                               "pf*(2+q)/2*alpha*z]",
                               "the v-coefficient alpha(q+q)v must be alpha(q+1)v for L_H g = 2g"),
                       "1")};
    c.defs.push_back({"fuv", "(v + c1*(q+2)/(2*c3*(q+1)))*w^(-(q+1)) + (q+2)/(2*alpha*(q+1))*K*ln(w)"});
    c.fams = {{"V_3", "H3:1",
               "w^(-(q+2))*V(v*w^(-(q+1)) + (q+2)/(2*alpha*(q+1))*K*ln(w), r*w^(-1-q/2), theta)"},
              {"V_G", "k:c1, X2:c2, H3:c3", "w^(-(q+2))*V(fuv, r*w^(-1-q/2), theta - c2*(q+2)/(2*c3)*ln(w))"}};
    c.coms = {{"k", "H3", "2*(q+1)/(q+2)*k"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "2i(q=-1)";
    c.title = "H = K (alpha u + beta)^(-1) ln r";
    add_params(c, {{"K", "7/10"}, {"alpha", "1"}, {"beta", "1/2"}});
    c.constraints = {"K != 0", "alpha != 0"};
    c.defs = {{"w", "alpha*u + beta"}};
    c.H = "K*w^(-1)*ln(r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta),
              with_psi(amended(gen("H3", "2i", "[2/alpha*w, -K/alpha*ln(w), 2*y, 2*z]", HV),
                               "[2/alpha*w, -K/alpha*ln(w), y, z]",
                               "the r d_r coefficient inside the bracket must be alpha/2, not alpha"),
                       "1")};
    c.fams = {{"V_3", "H3:1", "w^(-1)*V(v + K/(4*alpha)*ln(w)^2, r/sqrt(w), theta)"},
              {"V_G", "k:c1, X2:c2, H3:c3",
               "w^(-1)*V(v - c1/(2*c3)*ln(w) + K/(4*alpha)*ln(w)^2, r/sqrt(w), theta - c2/(2*c3)*ln(w))"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "2ii";
    c.title = "H = K exp(-Theta u/beta) ln r, Theta != 0";
    add_params(c, {{"K", "7/10"}, {"beta", "1/2"}, {"Theta", "3/5"}});
    c.constraints = {"K != 0", "beta != 0", "Theta != 0"};
    c.defs = {{"E", "exp(Theta/beta*u)"}};
    c.H = "K*exp(-Theta/beta*u)*ln(r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta),
              with_psi(gen("H3", "2ii", "[-2*beta/Theta, 2*v + beta/Theta*K*exp(-Theta/beta*u), y, z]", HV), "1")};
    c.fams = {{"V_3", "H3:1", "V(v*E + K/2*u, r*E, theta)*E", "V(v*E + K/2*u, r*sqrt(E), theta)*E",
               "r must be scaled by exp(Theta u/(2 beta)), the square root of the printed factor"},
              {"V_G", "k:c1, X2:c2, H3:c3",
               "V((v + c1/(2*c3))*E + K/2*u, r*E, theta - c2/(2*c3)*Theta/beta*v)*E",
               "V((v + c1/(2*c3))*E + K/2*u, r*sqrt(E), theta + c2*Theta/(2*c3*beta)*u)*E",
               "the radial argument needs the square root of the exponential, and the angle must be shifted by a "
               "multiple of u rather than v"}};
    c.coms = {{"k", "H3", "2*k"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "2ii(Theta=0)";
    c.title = "H = K ln r";
    add_params(c, {{"K", "7/10"}});
    c.constraints = {"K != 0"};
    c.H = "K*ln(r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta), with_psi(gen("H3", "2ii", "[u, v - K*u, y, z]", HV), "1")};
    c.fams = {{"V_3", "H3:1", "V(v/u + K*ln(u), r/u, theta)", "u^(-2)*V(v/u + K*ln(u), r/u, theta)",
               "the prefactor u^(-2) is needed to absorb the conformal factor of H_3"},
              {"V_G", "k:c1, X2:c2, H3:c3", "u^(-2)*V((v + c1/c3)/u + K*ln(u), r/u, theta - c2/c3*ln(u))"}};
    c.coms = {{"k", "H3", "k"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "2iii";
    c.title = "H = exp(g(u)) ln r, g = -ln(rho u^2 + alpha u + beta)";
    add_params(c, {{"rho", "3/10"}, {"alpha", "1"}, {"beta", "1"}});
    c.constraints = {"rho != 0", "alpha != 0", "beta != 0", "4*rho*beta - alpha^2 > 0"};
    c.defs = {{"g", "-ln(rho*u^2 + alpha*u + beta)"}, {"Dq", "sqrt(4*rho*beta - alpha^2)"}};
    c.functions = {{"I1", 1}, {"I2", 1}};
    c.rules = {{"I1", "g*exp(g)", "", 1}, {"I2", "exp(g)*(g + c1/c3)", "", 1}};
    c.H = "exp(g)*ln(r)";
    c.gens = {k_field(), gen("X2", "2", kDtheta),
              with_psi(gen("S3", "2iii",
                           "[2*exp(-g), rho*r^2 + g, (2*rho*u + alpha)*y, (2*rho*u + alpha)*z]", SC),
                       "2*rho*u + alpha")};
    c.fams = {{"V_3", "S3:1", "exp(g)*V(v - rho/2*r^2*u*exp(g) - I1(u), r*exp(g/2), theta)",
               "exp(g)*V(v - rho/2*r^2*u*exp(g) - I1(u)/2, r*exp(g/2), theta)",
               "with I_1' = g exp(g) the invariant contains I_1/2, since S_3 moves u at rate 2 exp(-g)"},
              {"V_G", "k:c1, X2:c2, S3:c3",
               "exp(-c3*g)*V(v - rho/2*r^2*u*exp(g) - I2(u), r*exp(g/2), "
               "theta - c2/c3*arctan((2*rho*u + alpha)/Dq)/Dq)",
               "exp(g)*V(v - rho/2*r^2*u*exp(g) - I2(u)/2, r*exp(g/2), theta - c2/c3*arctan((2*rho*u + alpha)/Dq)/Dq)",
               "the prefactor must be exp(g) and the integral enters with weight 1/2"}};
    c.t5 = 3;
    all.push_back(c);
  }

  // ---- classes 3 and 4 -------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "3";
    c.title = "H = u^(-2) W(s, t), rotation by c ln u";
    add_params(c, {{"c", "1/2"}});
    c.functions = {{"W", 2}};
    c.defs = {{"s", "y*sin(c*ln(u)) - z*cos(c*ln(u))"}, {"t", "y*cos(c*ln(u)) + z*sin(c*ln(u))"}};
    c.H = "u^(-2)*W(s, t)";
    c.gens = {k_field(), amended(gen("X2", "3", "[u, -v, 0, 0]"), "[u, -v, -c*z, c*y]",
                                 "s and t rotate with c ln u, so the Killing field needs the extra c d_theta")};
    c.fams = {{"V_G", "k:c1, X2:c2", "V(u*v - c1/c2*u, s, t)"}};
    c.coms = {{"k", "X2", "-k"}};
    c.t5 = 2;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "4";
    c.title = "H = W(s, t), rotation by c u";
    add_params(c, {{"c", "1/2"}});
    c.functions = {{"W", 2}};
    c.defs = {{"sb", "y*sin(c*u) - z*cos(c*u)"}, {"tb", "y*cos(c*u) + z*sin(c*u)"}};
    c.H = "W(sb, tb)";
    c.gens = {k_field(), amended(gen("X2", "4", kDu), "[1, 0, -c*z, c*y]",
                                 "s and t rotate with c u, so the Killing field needs the extra c d_theta")};
    c.fams = {{"V_G", "k:c1, X2:c2", "V(v - c1/c2*u, sb, tb)"}};
    c.t5 = 2;
    all.push_back(c);
  }

  // ---- class 5 ---------------------------------------------------------------------------------
  auto class5_base = [](ClassText& c) {
    c.gens = {k_field(), gen("X2", "5", kDtheta), gen("X3", "5", "[u, -v, 0, 0]")};
    c.coms = {{"k", "X3", "-k"}};
  };
  {
    ClassText c;
    c.id = "5";
    c.title = "H = u^(-2) W(r)";
    c.functions = {{"W", 1}};
    c.H = "u^(-2)*W(r)";
    class5_base(c);
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3", "V(v - c1/c3*u, r, theta - c2/c3*ln(u))",
               "V(u*v - c1/c3*u, r, theta - c2/c3*ln(u))", "v alone is not invariant under u d_u - v d_v; u v is"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "5i";
    c.title = "H = zeta u^(-2) ln r";
    add_params(c, {{"zeta", "13/10"}});
    c.constraints = {"zeta != 0"};
    c.H = "zeta*u^(-2)*ln(r)";
    class5_base(c);
    c.gens.push_back(with_psi(gen("S4", "5i", "[u^2, r^2/2 - zeta*ln(u), u*y, u*z]", SC), "u"));
    c.coms.push_back({"X3", "S4", "S4 - zeta*k"});
    c.defs = {{"F5", "(c1 + c4*u*v)/(c4*(c3 + c4*u)) - c4*u*r^2/(c3 + c4*u)^2 - zeta/c3*ln(c3 + c4*u) + "
                     "c4/c3*zeta*(1 + u*ln(u))/(c3 + c4*u)"},
              {"F5c", "u*v/(c3 + c4*u) - c4*u*r^2/(2*(c3 + c4*u)^2) + (c1*c3 - c3*c4*zeta*ln(u) + "
                      "c4*zeta*(c3 + c4*u)*(ln(u) - ln((c3 + c4*u)/c4)))/(c3*c4*(c3 + c4*u))"}};
    c.fams = {{"V_4", "S4:1", "u^(-2)*V(r/u, v - (r^2 + 2*zeta*(1 + ln(u)))/(2*u), theta)"},
              {"V_G", "k:c1, X2:c2, X3:c3, S4:c4",
               "(c3 + c4*u)^(-2)*V(r/(c3 + c4*u), F5, theta - c2/c3*ln(u/(c3 + c4*u)))",
               "(c3 + c4*u)^(-2)*V(r/(c3 + c4*u), F5c, theta - c2/c3*ln(u/(c3 + c4*u)))",
               "the v-invariant is u v/(c3 + c4 u) - c4 u r^2/(2 (c3 + c4 u)^2) plus a function of u"}};
    c.t5 = 4;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "5ii";
    c.title = "H = u^(-2) (delta r^(-sigma) - sigma (2 - sigma)^(-2) r^2)";
    add_params(c, {{"delta", "2/5"}, {"sigma", "1/2"}});
    c.constraints = {"sigma != 0", "sigma - 2 != 0", "sigma + 2 != 0"};
    c.H = "u^(-2)*(delta*r^(-sigma) - sigma*(2 - sigma)^(-2)*r^2)";
    class5_base(c);
    c.gens.push_back(with_psi(
        gen("C4", "5ii",
            "[u^(4/(2-sigma)), (sigma+2)/(sigma-2)^2*r^2*u^(2*sigma/(2-sigma)), "
            "2/(2-sigma)*u^((sigma+2)/(2-sigma))*y, 2/(2-sigma)*u^((sigma+2)/(2-sigma))*z]",
            PC),
        "2/(sigma-2)*u^((sigma+2)/(2-sigma))", "2/(2-sigma)*u^((sigma+2)/(2-sigma))",
        "div C_4 / 4 gives the prefactor 2/(2 - sigma); the printed 2/(sigma - 2) has the wrong sign"));
    c.coms.push_back({"X3", "C4", "-4/(sigma-2)*C4", "(sigma+2)/(2-sigma)*C4",
                      "X_3 raises the weight of u^(4/(2-sigma)) by one less than the printed factor"});
    c.functions = {{"I3", 1}, {"J1", 1}};
    c.defs = {{"f1", "(c3 + c4*u^((sigma+2)/(2-sigma)))^(-2/(sigma+2))"},
              {"f2", "c4 + c3*u^((sigma+2)/(2-sigma))"},
              {"g5", "v*f2^((sigma-2)/(sigma+2)) - c1/c3*f2^(-4/(sigma+2))*f2 + "
                     "c4*u^(4/(sigma+2))/(2-sigma)*f1^2*I3(u)*r^2"},
              {"Q5", "c3 + c4*u^((sigma+2)/(2-sigma))"}};
    c.defs.push_back({"g5c", "u*Q5^((sigma-2)/(sigma+2))*v - c4/(2-sigma)*u^((sigma+2)/(2-sigma))*f1^2*r^2 - c1*J1(u)"});
    c.rules = {{"I3", "f1^2*f2^(-4/(2+sigma))*u^(-2*(sigma+4)/(2+sigma))", "", 1}, {"J1", "f1^2", "", 1}};
    c.fams = {{"V_4", "C4:1", "u^(4/(sigma-2))*V(r*u^(2/(sigma-2)), v + r^2/(u*(sigma-2)), theta)"},
              {"V_G", "k:c1, X2:c2, X3:c3, C4:c4", "f1^2*V(r*f1, g5, theta - c2/c3*ln(f1))",
               "f1^2*V(r*f1, g5c, theta - c2/c3*ln(u) + c2*(2-sigma)/(c3*(sigma+2))*ln(Q5))",
               "the generic field is printed with Y_4 where the potential carries c_4, read as c_4 Y_4; the angle and "
               "v-invariants do not satisfy the invariance condition and are rederived"}};
    c.t5 = 4;
    all.push_back(c);
  }

  // ---- class 6 ---------------------------------------------------------------------------------
  auto class6_base = [](ClassText& c) {
    c.gens = {k_field(), gen("X2", "6", kDtheta), gen("X3", "6", kDu)};
  };
  {
    ClassText c;
    c.id = "6";
    c.title = "H = W(r)";
    c.functions = {{"W", 1}};
    c.H = "W(r)";
    class6_base(c);
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3", "V(v - c1/c3*u, r, theta - c2/c3*u)"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "6i";
    c.title = "H = N r^2/4 + delta r^(-2)";
    add_params(c, {{"N", "4/5"}, {"delta", "2/5"}});
    c.constraints = {"N > 0"};
    c.defs = {{"w", "sqrt(2*N)"},
              {"f1", "(c3 + c4*sin(w*u) + c5*cos(w*u))^(-1)"},
              {"Dc", "sqrt(c3^2 - c4^2 - c5^2)"},
              {"f2", "sqrt(2)/(sqrt(N)*Dc)*arctan(((c3 - c5)*tan(w/2*u) + c4)/Dc)"},
              {"g1", "r^2*f1"}};
    c.defs.push_back({"g2", "2*v + w*g1*(c5/2*sin(w*u) - c4*cos(w/2*u)^2) - 2*c1*f2"});
    c.defs.push_back({"g3", "theta - c2*f2"});
    c.exclusions = {"cos(w*u)", "sin(w*u)"};
    c.H = "N/4*r^2 + delta*r^(-2)";
    class6_base(c);
    c.gens.push_back(with_psi(
        gen("C4", "6i", "[sin(w*u), -N*r^2/2*sin(w*u), w/2*cos(w*u)*y, w/2*cos(w*u)*z]", PC), "w/2*cos(w*u)"));
    c.gens.push_back(with_psi(
        gen("C5", "6i", "[cos(w*u), -N*r^2/2*cos(w*u), -w/2*sin(w*u)*y, -w/2*sin(w*u)*z]", PC),
        "-w/2*sin(w*u)"));
    c.coms = {{"X3", "C4", "C5", "w*C5", "d_u of sin(w u) brings down the frequency w = sqrt(2N)"},
              {"X3", "C5", "-C4", "-w*C4", "d_u of cos(w u) brings down the frequency w = sqrt(2N)"},
              {"C4", "C5", "-X3", "-w*X3", "the bracket carries the frequency w = sqrt(2N)"}};
    c.fams = {{"V_4", "C4:1", "sin(w*u)*V(r^2*sin(w*u), v - w/4*r^2/tan(w*u), theta)",
               "sin(w*u)^(-1)*V(r^2/sin(w*u), v - w/4*r^2/tan(w*u), theta)",
               "the factor sin and the scaling of r^2 enter with power -1"},
              {"V_5", "C5:1", "cos(w*u)*V(r^2*cos(w*u), v + w/4*r^2*tan(w*u), theta)",
               "cos(w*u)^(-1)*V(r^2/cos(w*u), v + w/4*r^2*tan(w*u), theta)",
               "the factor cos and the scaling of r^2 enter with power -1"},
              {"V_G", "k:c1, X2:c2, X3:c3, C4:c4, C5:c5", "V(g1, g2, g3)", "f1*V(g1, g2, g3)",
               "the prefactor f_1 is needed to absorb the conformal factor"}};
    c.t5 = 5;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "6ii";
    c.title = "H = delta r^(-2)";
    add_params(c, {{"delta", "2/5"}});
    c.constraints = {"delta != 0", "c3*c5 - c4^2 > 0"};
    c.defs = {{"f1", "(c3 + 2*c4*u + c5*u^2)^(-1)"},
              {"f2", "arctan((c4 + c5*u)/sqrt(c3*c5 - c4^2))/sqrt(c3*c5 - c4^2)"}};
    c.H = "delta*r^(-2)";
    class6_base(c);
    c.gens.push_back(with_psi(gen("H4", "6ii", "[2*u, 0, y, z]", HV), "1"));
    c.gens.push_back(with_psi(gen("S5", "6ii", "[u^2, r^2/2, u*y, u*z]", SC), "u/2", "u",
                              "div S_5 / 4 = u; the printed u/2 is half the conformal factor"));
    c.coms = {{"X3", "H4", "2*X3"},
              {"X3", "S5", "H4"},
              {"H4", "S5", "2*S6", "2*S5", "the right side names S_6, which does not exist in this class"}};
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3, H4:c4, S5:c5",
               "f1*V(r^2*f1, v - c5/2*r^2*f1 - c1*f2, theta - c2*f2)",
               "f1*V(r^2*f1, v - c5/2*r^2*u*f1 - c1*f2, theta - c2*f2)",
               "the r^2 term of the v-invariant needs a factor u"}};
    c.t5 = 5;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "6iii";
    c.title = "H = zeta ln r";
    add_params(c, {{"zeta", "13/10"}});
    c.constraints = {"zeta != 0"};
    c.H = "zeta*ln(r)";
    class6_base(c);
    c.gens.push_back(with_psi(gen("H4", "6iii", "[u, v - zeta*u, y, z]", HV), "1"));
    c.coms = {{"k", "H4", "k"}, {"X3", "H4", "X3 - zeta*k"}};
    c.fams = {{"V_4", "H4:1", "u^(-2)*V(v/u + zeta*ln(u), r/u, theta)"},
              {"V_G", "k:c1, X2:c2, X3:c3, H4:c4",
               "V((c4*v + c1 + c3*zeta)/(c4*(c3 + c4*u)) - zeta/c4*ln(c3 + c4*u), r/(c3 + c4*u), "
               "theta - c2/c4*ln(c3 + c4*u))",
               "(c3 + c4*u)^(-2)*V((c4*v + c1 + c3*zeta)/(c4*(c3 + c4*u)) + zeta/c4*ln(c3 + c4*u), r/(c3 + c4*u), "
               "theta - c2/c4*ln(c3 + c4*u))",
               "the prefactor (c3 + c4 u)^(-2) is missing and the logarithm enters with a plus sign"}};
    c.t5 = 4;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "6iv";
    c.title = "H = delta r^(-sigma)";
    add_params(c, {{"delta", "2/5"}, {"sigma", "1/2"}});
    c.constraints = {"sigma != 0", "sigma - 2 != 0", "delta != 0"};
    c.defs = {{"f1", "(2*c3 + c4*u*(2 + sigma)*u)^(-4/(2 + sigma))"},
              {"f1c", "(2*c3 + c4*(2 + sigma)*u)^(-4/(2 + sigma))"}};
    c.H = "delta*r^(-sigma)";
    class6_base(c);
    c.gens.push_back(with_psi(gen("H4", "6iv", "[(2 + sigma)/2*u, (2 - sigma)/2*v, y, z]", HV), "", "1",
                              "the conformal factor is named but its value is not stated; div H_4 / 4 = 1"));
    c.coms = {{"k", "H4", "(1 - sigma/2)*k"}, {"X3", "H4", "(1 + sigma/2)*X3"}};
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3, H4:c4",
               "f1*V((v + 2*c1/(c3*(2 - sigma)))^2*f1, r^2*f1, 2*theta + c2*ln(f1))",
               "f1c*V((v + 2*c1/(c4*(2 - sigma)))^2*f1c^((2 - sigma)/2), r^2*f1c, 2*theta + c2/c4*ln(f1c))",
               "printed without the outer V, read as f_1 V(...); f_1 carries a spurious factor u, c_3 must be c_4 "
               "in the v-shift, and the exponents follow from the scaling weights of H_4"}};
    c.t5 = 4;
    all.push_back(c);
  }

  // ---- class 7 ---------------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "7";
    c.title = "H = exp(2 omega theta) W(r)";
    add_params(c, {{"omega", "1"}});
    c.constraints = {"omega != 0"};
    c.functions = {{"W", 1}};
    c.H = "exp(2*omega*theta)*W(r)";
    c.gens = {k_field(), gen("X2", "7", "[omega*u, -omega*v, z, -y]"), gen("X3", "7", kDu)};
    c.coms = {{"k", "X2", "-omega*k"}, {"X2", "X3", "-omega*X3"}};
    c.fams = {{"V_2", "X2:1", "V(v*u, r, omega*theta + ln(u))"},
              {"V_G", "k:c1, X2:c2, X3:c3",
               "V(v*(c3 + c2*omega*u) - c1*u, r, omega*theta + ln(c2*omega*u + c3))"}};
    c.t5 = 3;
    all.push_back(c);
  }

  // ---- class 8 ---------------------------------------------------------------------------------
  auto class8_defs = [](ClassText& c) {
    add_params(c, {{"eta", "3/5"}, {"sigma", "1/2"}});
    c.defs = {{"zeta2", "eta^2 + sigma^2"},
              {"zeta", "sqrt(eta^2 + sigma^2)"},
              {"tp", "eta*y + sigma*z"},
              {"sp", "eta*z - sigma*y"}};
  };
  auto x2_8 = []() {
    return amended(gen("X2", "8", "[u, 0, 0, 0]"), kDu,
                   "H does not depend on u, so d_u is the Killing field; u d_u rescales g_uu");
  };
  auto delta0_gens = [&](ClassText& c) {
    c.gens = {k_field(), x2_8(), gen("X3", "8", "[0, 0, -eta/zeta2, -sigma/zeta2]"),
              gen("X4", "8", "[0, tp, eta*u, sigma*u]")};
    c.coms = {{"X2", "X4", "zeta2*X3", "-zeta2*X3", "with X_3 = -d_t' the bracket is -zeta^2 X_3"},
              {"X3", "X4", "k", "-k", "with X_3 = -d_t' the bracket is -k"}};
  };
  {
    ClassText c;
    c.id = "8";
    c.title = "H = exp(2 delta t') W(s'), delta != 0";
    class8_defs(c);
    add_params(c, {{"c", "1/2"}});
    c.constraints = {"c != 0", "eta^2 + sigma^2 != 0"};
    c.defs.push_back({"dl", "-c/(eta^2 + sigma^2)"});
    c.functions = {{"W", 1}};
    c.H = "exp(2*dl*tp)*W(sp)";
    c.gens = {k_field(), x2_8(), gen("X3", "8", "[dl*u, -dl*v, -eta/zeta2, -sigma/zeta2]")};
    c.coms = {{"k", "X3", "dl*k", "-dl*k", "[d_v, -delta v d_v] = -delta d_v"},
              {"X2", "X3", "-X2", "dl*X2", "[d_u, delta u d_u] = delta d_u"}};
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3", "V(c1*u + v*(dl*c3*u - c2), sp, dl*tp + ln(dl*c3*u - c2))",
               "V((c1 - dl*c3*v)*(c2 + dl*c3*u), sp, (c2 + dl*c3*u)*exp(dl*tp))",
               "the printed invariants are not annihilated by the field and the logarithm has a negative argument"}};
    c.t5 = 3;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "8(delta=0)";
    c.title = "H = W(s')";
    class8_defs(c);
    c.constraints = {"eta^2 + sigma^2 != 0"};
    c.functions = {{"W", 1}};
    c.H = "W(sp)";
    delta0_gens(c);
    c.fams = {{"V_G", "k:c1, X2:c2, X3:c3, X4:c4",
               "V(sp, c2*tp - (c3 + c4*zeta2/2*u)*u, "
               "c4*tp*u - c2*v + u*(c1*u - c3*c4/(2*c2)*u^2 - c4^2*zeta2/(3*c2)*u^2))",
               "V(sp, c2*tp + c3*u - c4*zeta2/2*u^2, "
               "c4*tp*u - c2*v + c1*u + c3*c4/(2*c2)*u^2 - c4^2*zeta2/(3*c2)*u^3)",
               "the generic field is printed as X_8 + c_3 X_4 while the potential carries c_4; read as c_4 X_4; the u-polynomials are rederived from the flow"}};
    c.t5 = 4;
    all.push_back(c);
  }
  auto h5_8 = [](ClassText& c) {
    c.gens.push_back(with_psi(gen("H5", "8i", "[(1 - gamma/2)*u, (1 + gamma/2)*v, y, z]", HV), "1"));
    c.coms.push_back({"k", "H5", "(1 + gamma/2)*k"});
    c.coms.push_back({"X2", "H5", "(1 - gamma/2)*X2"});
    c.coms.push_back({"X3", "H5", "X3"});
    c.coms.push_back({"X4", "H5", "gamma/2*X4"});
  };
  {
    ClassText c;
    c.id = "8i";
    c.title = "H = K s'^gamma";
    class8_defs(c);
    add_params(c, {{"K", "7/10"}, {"gamma", "3"}});
    c.constraints = {"K != 0", "gamma != 0", "gamma - 2 != 0", "gamma + 2 != 0", "gamma - 1 != 0"};
    c.H = "K*sp^gamma";
    delta0_gens(c);
    h5_8(c);
    c.defs.push_back({"g1", "c5*(gamma - 1)*u - 2*c2"});
    c.defs.push_back({"P8", "c2 + c5*(1 - gamma/2)*u"});
    c.defs.push_back({"g2", "2*c1*c5^2*gamma^2 + 4*c2*c4^4*zeta2 + 4*gamma*c3*c4*c5 + "
                            "2*(gamma + 2)*c5*(c4*(c5*tp*gamma + c4*zeta2*u) + c5^2*gamma^2*v)"});
    c.fams = {{"V_5", "H5:1", "u^(4/(gamma-2))*V(v*u^((gamma+2)/(gamma-2)), sp*u^(2/(gamma-2)), tp*u^(2/(gamma-2)))"},
              {"V_G", "k:c1, X2:c2, X3:c3, X4:c4, H5:c5",
               "V(sp*g1^(2/(gamma-2)), g1^(2/(gamma-2))*(gamma*c5*(c5*tp + c3) + 2*c4*(eta^2 + gamma^2)*(c2 + c5*u)), "
               "g1^((gamma+2)/(gamma-2))*g2/(gamma^2*(gamma + 2)*c5^3))",
               "P8^(4/(gamma-2))*V(sp*P8^(2/(gamma-2)), (tp + 2*c4*zeta2/(c5*gamma)*u + "
               "(2*c4*zeta2*c2/(c5*gamma) - c3)/c5)*P8^(2/(gamma-2)), (v + 2*c4/(c5*gamma)*tp + "
               "2*c4^2*zeta2/(c5^2*gamma^2)*u + (2*c1*c5^2*gamma^2 + 4*c2*c4^2*zeta2 - 4*c3*c4*c5*gamma)/"
               "(c5^3*gamma^2*(gamma + 2)))*P8^((gamma+2)/(gamma-2)))",
               "the printed form has no conformal prefactor and its u-rate c5 (gamma - 1) u - 2 c2 does not match "
               "H_5; all three invariants are rederived from the flow with rate c2 + c5 (1 - gamma/2) u"}};
    c.t5 = 5;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "8ii";
    c.title = "H = K s'^2";
    class8_defs(c);
    add_params(c, {{"K", "7/10"}, {"gamma", "2"}});
    c.constraints = {"K > 0"};
    c.defs.push_back({"w8", "sqrt(2*K)"});
    c.exclusions = {"cos(w8*zeta*u)", "sin(w8*zeta*u)"};
    c.H = "K*sp^2";
    delta0_gens(c);
    h5_8(c);
    c.gens.push_back(gen("X5", "8ii",
                         "[0, w8/zeta*sp*cos(w8*zeta*u), -sigma/zeta2*sin(w8*zeta*u), eta/zeta2*sin(w8*zeta*u)]"));
    c.gens.push_back(gen("X6", "8ii",
                         "[0, w8/zeta*sp*sin(w8*zeta*u), sigma/zeta2*cos(w8*zeta*u), -eta/zeta2*cos(w8*zeta*u)]"));
    c.coms.push_back({"X2", "X5", "-w8*zeta*X6"});
    c.coms.push_back({"X2", "X6", "w8*zeta*X5"});
    c.coms.push_back({"H5", "X5", "-X5"});
    c.coms.push_back({"H5", "X6", "-X6"});
    c.coms.push_back({"X5", "X6", "w8/zeta*k"});
    c.fams = {{"V_5", "X5:1", "V(u, sp^2 - sqrt(2)*zeta/sqrt(K)*v*tan(w8*zeta*u), tp)"},
              {"V_6", "X6:1", "V(u, sp^2 + sqrt(2)*zeta/sqrt(K)*v/tan(w8*zeta*u), tp)"}};
    c.t5 = 6;
    c.t5c = 7;
    c.t5note = "the row itself lists seven fields: k, X_2, X_3, X_4, X_5, X_6 and Y_5";
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "8iii";
    c.title = "H = K s'^(-2)";
    class8_defs(c);
    add_params(c, {{"K", "7/10"}, {"gamma", "-2"}});
    c.constraints = {"K != 0"};
    c.exclusions = {"sp"};
    c.H = "K*sp^(-2)";
    delta0_gens(c);
    h5_8(c);
    c.gens.push_back(with_psi(gen("S6", "8iii", "[u^2, (sp^2 + tp^2)/(2*zeta2), u*y, u*z]", SC), "u"));
    c.coms.push_back({"X2", "S6", "H5"});
    c.coms.push_back({"X3", "S6", "X4/zeta2", "-X4/zeta2", "with X_3 = -d_t' the bracket is -X_4/zeta^2"});
    c.coms.push_back({"H5", "S6", "2*S6"});
    c.fams = {{"V_6", "S6:1", "u^2*V(v - (sp^2 + tp^2)/(2*zeta2*u), sp/u, tp/u)",
               "u^(-2)*V(v - (sp^2 + tp^2)/(2*zeta2*u), sp/u, tp/u)", "the prefactor must be u^(-2)"}};
    c.t5 = 6;
    all.push_back(c);
  }

  // ---- class 9 ---------------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "9";
    c.title = "H = K exp(eta y - sigma z)";
    add_params(c, {{"K", "7/10"}, {"eta", "3/5"}, {"sigma", "1/2"}});
    c.constraints = {"K != 0", "sigma != 0"};
    c.defs = {{"zeta2", "eta^2 + sigma^2"}};
    c.H = "K*exp(eta*y - sigma*z)";
    c.gens = {k_field(),
              amended(gen("X2", "9", "[u, 0, 0, 0]"), kDu, "H does not depend on u, so d_u is the Killing field"),
              amended(gen("X3", "9", "[u, -v, 0, 1/sigma]"), "[u, -v, 0, 2/sigma]",
                      "u d_u - v d_v rescales g_uu by 2, which the z-shift must undo: 2/sigma, not 1/sigma"),
              gen("X4", "9", "[0, y + eta/sigma*z, u, eta/sigma*u]"), gen("X5", "9", "[0, 0, 1, eta/sigma]")};
    c.coms = {{"k", "X3", "-k"},
              {"X2", "X3", "X2"},
              {"X2", "X4", "X5"},
              {"X3", "X4", "eta/sigma^2*k + X4", "2*eta/sigma^2*k + X4", "follows from the corrected X_3"},
              {"X4", "X5", "-(eta^2 + sigma^2)/sigma^2*k"}};
    c.defs.push_back({"g3c", "exp(c3*(c3*sigma*z - c4*eta*u))*(c3*u + c2)^(eta*(c2*c4 - c3*c5) - 2*c3^2)"});
    c.defs.push_back({"C9", "(-c2*c4*(-c2*c4*eta^2 - c2*c4*sigma^2 + 2*c3^2*eta + c3*c5*eta^2 + c3*c5*sigma^2)*"
                            "ln(c2 + c3*u) + c3^2*c4^2*u^2*(eta^2 + sigma^2)/2 - c3*u*(c1*c3^2*sigma^2 + "
                            "c2*c4^2*eta^2 + c2*c4^2*sigma^2 - 2*c3^2*c4*eta - c3*c4*c5*eta^2 - "
                            "c3*c4*c5*sigma^2))/(c3^3*sigma^2)"});
    c.defs.push_back({"C3", "c2*c4/(c3*sigma^2)*(zeta2*c2*c4 - eta*c3*(c3 + eta*c5) - sigma^2*c3*c5)"});
    c.defs.push_back({"g1", "exp(c3*(c3*y - c4*u))*(c3*u + c2)^(c2*c4 - c3*c5)"});
    c.defs.push_back({"g3", "exp(c3*(c3*sigma*z - c4*eta*u))*(c3*u + c2)^(eta*(c2*c4 - c3*c5) - c3^2)"});
    c.defs.push_back({"gbar", "c2*v + (c3*v - c4*y - c1)*u + c4*c5/c3*(zeta2/sigma^2*(u + c2/c3)) + "
                              "c2*c4/(sigma^2*c3^2)*(eta*c3 - c4*zeta2*(u + c2)) + c4^2/(2*sigma^2*c3)*zeta2*u^2 + "
                              "c4*eta*(1 - sigma*z)*u/sigma^2"});
    c.fams = {{"V_1", "k:1", "V(u, y, z)"},
              {"V_2", "X2:1", "V(v, y, z)"},
              {"V_3", "X3:1", "V(v*u, y, u*exp(-sigma*z))", "V(v*u, y, u*exp(-sigma*z/2))",
               "follows from the corrected X_3"},
              {"V_4", "X4:1",
               "V(u, z - eta/sigma*y, 2*v*sigma^2 - zeta2/u*y - 2*eta*(sigma*z - eta*y)*y/(2*sigma^2*u))",
               "V(u, z - eta/sigma*y, v - sigma^2*(y + eta/sigma*z)^2/(2*zeta2*u))",
               "the v-invariant must satisfy X_4(w) = 0 with X_4(v) = y + eta z/sigma"},
              {"V_5", "X5:1", "V(u, v, z - eta/sigma*y)"},
              {"V_G", "k:c1, X2:c2, X3:c3, X4:c4, X5:c5", "V(g1, g3, gbar*(c3*u + c2)^C3)",
               "V(g1, g3c, (c2 + c3*u)*v - c4*u*y - c4*eta/sigma*u*z + C9)",
               "the second argument is printed as g_2, which is never defined, read as g_3; with the corrected X_3 "
               "the power of (c3 u + c2) in g_3 changes and the v-invariant is rederived"}};
    c.t5 = 5;
    all.push_back(c);
  }

  // ---- plane waves -----------------------------------------------------------------------------
  {
    ClassText c;
    c.id = "10";
    c.title = "plane wave H = (A y^2 + C z^2)/2 + B y z";
    c.functions = {{"A", 1}, {"B", 1}, {"C", 1}};
    plane_wave(c, "A(u)", "B(u)", "C(u)", false, true);
    c.exclusions = {"v"};
    c.fams = {{"V_a", "Xa1:1",
               "V(u, v - Derivative[1](e1)(u)/d1(u)*y*z - y^2/(2*d1(u)^2)*(Derivative[1](d1)(u)*d1(u) - "
               "Derivative[1](e1)(u)*e1(u)), z - e1(u)/d1(u)*y)"},
              {"V_6", "H6:1", "v^(-1)*V(u, y^2/v, z^2/v)"},
              {"V_G", "k:c1, Xa1:c2, H6:c5",
               "(c2*d1(u) + c5*y)^(-2)*V(u, (2*c5*v + c1)/(c2*d1(u) + c5*y)^2 + "
               "c2*(Derivative[1](d1)(u)*(c2*d1(u) + c5*y) + Derivative[1](e1)(u)*(c2*e1(u) + 2*c5*z))/"
               "(c2*d1(u) + c5*y)^2, (c5*z + c2*e1(u))/(c5*(c2*d1(u) + c5*y)))",
               "(c2*d1(u) + c5*y)^(-2)*V(u, (2*c5*v + c1 + c2/c5*(Derivative[1](d1)(u)*(c2*d1(u) + 2*c5*y) + "
               "Derivative[1](e1)(u)*(c2*e1(u) + 2*c5*z)))/(c2*d1(u) + c5*y)^2, (c5*z + c2*e1(u))/(c2*d1(u) + c5*y))", "the printed sum c_a X_a is read as the single term c_2 X_1 and the HV coefficient as c_5; the "
               "second argument is rederived since the printed one is not invariant"}};
    c.t5 = 6;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "10i";
    c.title = "plane wave with an extra sp.CKV, phi = 2 gamma int du/(u^2 + beta)";
    add_params(c, {{"K", "7/10"}, {"beta", "1/2"}, {"gamma", "3"}, {"lambda", "1/4"}});
    c.constraints = {"K != 0", "beta > 0"};
    c.defs = {{"phi", "2*gamma/sqrt(beta)*arctan(u/sqrt(beta))"}, {"wk", "K*(u^2 + beta)^(-2)"}};
    plane_wave(c, "wk*(sin(phi) + lambda)", "wk*cos(phi)", "-wk*(sin(phi) - lambda)", false, false);
    GenText s7 = amended(
        gen("S7", "10i", "[u^2 + beta, (y^2 + z^2)/2, u*y + gamma*z, u*z - gamma*z]", SC),
        "[u^2 + beta, (y^2 + z^2)/2, u*y + gamma*z, u*z - gamma*y]",
        "the rotational part must be gamma (z d_y - y d_z); the printed z-component u z - gamma z breaks it");
    s7 = with_psi(s7, "u");
    s7.fit = false;
    c.gens.push_back(s7);
    c.fams = {{"V_7", "S7:1",
               "(u^2 + beta)^(-1)*V(v - r^2*u/(2*(u^2 + beta)), r^2/(u^2 + beta), exp(2*theta)/(u^2 + beta)^gamma)",
               "(u^2 + beta)^(-1)*V(v - r^2*u/(2*(u^2 + beta)), r^2/(u^2 + beta), theta + phi/2)",
               "S_7 rotates at rate gamma/(u^2 + beta) in u, so the angle invariant is theta + phi/2"}};
    c.t5 = 7;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "10ii";
    c.title = "plane wave with A, B, C proportional to (u^2 + beta)^(-2)";
    add_params(c, {{"alpha", "1"}, {"b", "1/3"}, {"c", "1/2"}, {"beta", "1/2"}});
    c.constraints = {"beta > 0"};
    c.defs = {{"wq", "(u^2 + beta)^(-2)"}};
    plane_wave(c, "-alpha*wq", "-b*wq", "-c*wq", false, false);
    GenText s7 = with_psi(gen("S7", "10ii", "[u^2 + beta, (y^2 + z^2)/2, u*y, u*z]", SC), "u");
    s7.fit = false;
    c.gens.push_back(s7);
    c.fams = {{"V_7", "S7:1", "(u^2 + beta)^(-1)*V(v - r^2*u/(2*(u^2 + beta)), r^2/(u^2 + beta), theta)"}};
    c.t5 = 7;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "11";
    c.title = "plane wave with A, B, C proportional to u^(-2)";
    add_params(c, {{"alpha", "1"}, {"beta", "1/2"}, {"gamma", "3"}});
    plane_wave(c, "alpha*u^(-2)", "beta*u^(-2)", "gamma*u^(-2)", false, false);
    GenText x7 = gen("X7", "11", "[u, -v, 0, 0]");
    x7.fit = false;
    c.gens.push_back(x7);
    c.fams = {{"V_7", "X7:1", "V(v*u, y, z)"}};
    c.t5 = 7;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "12";
    c.title = "plane wave rotating with phi = 2 delta ln u";
    add_params(c, {{"c", "1/2"}, {"delta", "2/5"}, {"lambda", "1/4"}});
    c.defs = {{"phi", "2*delta*ln(u)"}};
    plane_wave(c, "-c*u^(-2)*(sin(phi) + lambda)", "c*u^(-2)*cos(phi)", "c*u^(-2)*(sin(phi) - lambda)", false,
               false);
    GenText x7 = gen("X7", "12", "[u, -v, -delta*z, delta*y]");
    x7.fit = false;
    c.gens.push_back(x7);
    c.fams = {{"V_7", "X7:1", "V(v*u, r, exp(theta)*u^(-delta))"}};
    c.t5 = 7;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "13";
    c.title = "plane wave with constant A, B, C";
    add_params(c, {{"alpha", "1"}, {"beta", "1/2"}, {"c", "1/2"}});
    plane_wave(c, "alpha", "beta", "c", true, false);
    GenText x7 = gen("X7", "13", kDu);
    x7.tabled = false;
    c.gens.push_back(x7);
    c.fams = {{"V_7", "X7:1", "V(v, y, z)"}};
    c.t5 = 7;
    all.push_back(c);
  }
  {
    ClassText c;
    c.id = "14";
    c.title = "plane wave rotating with angle 2 delta u";
    add_params(c, {{"c", "1/2"}, {"delta", "2/5"}, {"lambda", "1/4"}});
    plane_wave(c, "-c*sin(2*delta*u) + lambda", "-c*cos(2*delta*u)", "c*sin(2*delta*u) + lambda", false, false);
    GenText x7 = amended(gen("X7", "14", kDu), "[1, 0, delta*z, -delta*y]",
                         "H depends on theta + delta u, so d_u alone is not Killing; d_u - delta d_theta is");
    x7.fit = false;
    c.gens.push_back(x7);
    c.fams = {{"V_7", "X7:1", "V(u, r, exp(theta)*u^(-delta))", "V(v, r, theta + delta*u)",
               "invariants of d_u - delta d_theta"}};
    c.t5 = 7;
    all.push_back(c);
  }
  return all;
}

}  // namespace

const std::vector<ClassText>& classes() {
  static const std::vector<ClassText> all = build();
  return all;
}

}  // namespace ppsym::data
