#pragma once

// Bundled copy of schemas/axioms.json. DBLCAT_SCHEMA_DIR overrides it.

namespace dblcat {

inline std::string default_axiom_schema_text() {
  return R"DBLCAT_SCHEMA(
{
  "schema_version": "dblcat-axioms/1",
  "axioms": [
    {
      "name": "TA1-pentagonator",
      "structure": "horizontal_monoidal",
      "for": {"A": "D", "B": "D", "C": "D", "D": "D", "E": "D"},
      "source": "external: GPS (TA1), rendered on the K5 associahedron; six pentagonator faces, three associator-naturality squares",
      "lhs": {"v": [
        {"h": ["x(p(A,B,C,D),Id(u(E)))", "Id(a(A,(B.(C.D)),E))", "Id(ten(u(A),a(B,(C.D),E)))", "Id(ten(u(A),ten(u(B),a(C,D,E))))"]},
        {"h": ["Id(ten(a((A.B),C,D),u(E)))", "p(A,B,(C.D),E)", "Id(ten(u(A),ten(u(B),a(C,D,E))))"]},
        {"h": ["Id(ten(a((A.B),C,D),u(E)))", "Id(a((A.B),(C.D),E))", "adelta_inv(u(A),u(B),a(C,D,E))"]},
        {"h": ["p((A.B),C,D,E)", "Id(a(A,B,(C.(D.E))))"]}
      ]},
      "rhs": {"v": [
        {"h": ["Id(ten(ten(a(A,B,C),u(D)),u(E)))", "Id(ten(a(A,(B.C),D),u(E)))", "adelta(u(A),a(B,C,D),u(E))", "Id(ten(u(A),a(B,(C.D),E)))", "Id(ten(u(A),ten(u(B),a(C,D,E))))"]},
        {"h": ["Id(ten(ten(a(A,B,C),u(D)),u(E)))", "Id(ten(a(A,(B.C),D),u(E)))", "Id(a(A,((B.C).D),E))", "x(Id(u(A)),p(B,C,D,E))"]},
        {"h": ["Id(ten(ten(a(A,B,C),u(D)),u(E)))", "p(A,(B.C),D,E)", "Id(ten(u(A),a(B,C,(D.E))))"]},
        {"h": ["adelta(a(A,B,C),u(D),u(E))", "Id(a(A,(B.C),(D.E)))", "Id(ten(u(A),a(B,C,(D.E))))"]},
        {"h": ["Id(a(((A.B).C),D,E))", "p(A,B,C,(D.E))"]}
      ]}
    },
    {
      "name": "TA2-left-normalization",
      "structure": "horizontal_monoidal",
      "for": {"B": "D", "C": "D", "D": "D"},
      "source": "external: GPS (TA2) as the left normalization of the pentagonator against l and the lambda-naturality cells",
      "lhs": {"v": [
        {"h": ["p(I,B,C,D)", "Id(lam((B.(C.D))))"]},
        {"h": ["Id(a((I.B),C,D))", "l_inv(B,(C.D))"]},
        "adelta_inv(lam(B),u(C),u(D))"
      ]},
      "rhs": {"v": [
        {"h": ["Id(ten(a(I,B,C),u(D)))", "Id(a(I,(B.C),D))", "ldelta(a(B,C,D))"]},
        {"h": ["Id(ten(a(I,B,C),u(D)))", "l_inv((B.C),D)", "Id(a(B,C,D))"]},
        {"h": ["x(l_inv(B,C),Id(u(D)))", "Id(a(B,C,D))"]}
      ]}
    },
    {
      "name": "TA3-right-normalization",
      "structure": "horizontal_monoidal",
      "for": {"A": "D", "B": "D", "C": "D"},
      "source": "external: GPS (TA3) as the right normalization of the pentagonator against r and the rho-naturality cells",
      "lhs": {"v": [
        {"h": ["p(A,B,C,I)", "Id(ten(u(A),ten(u(B),ro(C))))"]},
        {"h": ["Id(a((A.B),C,I))", "adelta_inv(u(A),u(B),ro(C))"]},
        {"h": ["r_inv((A.B),C)", "Id(a(A,B,C))"]}
      ]},
      "rhs": {"v": [
        {"h": ["Id(ten(a(A,B,C),u(I)))", "Id(a(A,(B.C),I))", "x(Id(u(A)),r_inv(B,C))"]},
        {"h": ["Id(ten(a(A,B,C),u(I)))", "r_inv(A,(B.C))"]},
        "rdelta(a(A,B,C))"
      ]}
    },
    {
      "name": "ACT1-action-pentagon",
      "structure": "horizontal_action",
      "for": {"M": "M", "N": "M", "P": "M", "Q": "M", "E": "D"},
      "source": "external: GPS (TA1) analogue for lax actions, rendered on the mixed associahedron with beta-naturality squares",
      "lhs": {"v": [
        {"h": ["Id(ten(u(M),ten(u(N),b(P,Q,E))))", "pt(M,N,(P.Q),E)"]},
        {"h": ["bdelta(u(M),u(N),b(P,Q,E))", "Id(b((M.N),(P.Q),E))", "Id(ten(aM(M,N,(P.Q)),u(E)))"]}
      ]},
      "rhs": {"v": [
        {"h": ["xa(IdM(u(M)),pt(N,P,Q,E))", "Id(b(M,(N.(P.Q)),E))"]},
        {"h": ["Id(ten(u(M),b(N,P,(Q.E))))", "Id(ten(u(M),b((N.P),Q,E)))", "bdelta(u(M),aM(N,P,Q),u(E))"]},
        {"h": ["Id(ten(u(M),b(N,P,(Q.E))))", "pt(M,(N.P),Q,E)", "Id(ten(ten(u(M),aM(N,P,Q)),u(E)))"]},
        {"h": ["pt(M,N,P,(Q.E))", "Id(b((M.(N.P)),Q,E))", "Id(ten(aM(M,(N.P),Q),u(E)))", "Id(ten(ten(u(M),aM(N,P,Q)),u(E)))"]},
        {"h": ["Id(b(M,N,(P.(Q.E))))", "Id(b((M.N),P,(Q.E)))", "bdelta(aM(M,N,P),u(Q),u(E))", "Id(ten(ten(u(M),aM(N,P,Q)),u(E)))"]},
        {"h": ["Id(b(M,N,(P.(Q.E))))", "Id(b((M.N),P,(Q.E)))", "Id(b(((M.N).P),Q,E))", "xa(pM(M,N,P,Q),Id(u(E)))"]},
        {"h": ["Id(b(M,N,(P.(Q.E))))", "pt_inv((M.N),P,Q,E)", "Id(ten(aM(M,N,(P.Q)),u(E)))"]}
      ]}
    },
    {
      "name": "ACT2-action-left-normalization",
      "structure": "horizontal_action",
      "for": {"Y": "M", "Z": "M", "W": "D"},
      "source": "external: GPS (TA2) analogue for lax actions, normalization of p-tilde against l-tilde and the unit cells",
      "lhs": {"v": [
        {"h": ["Id(nu((Y.(Z.W))))", "pt(J,Y,Z,W)", "Id(ten(lamM((Y.Z)),u(W)))"]},
        {"h": ["Id(nu((Y.(Z.W))))", "Id(b(J,Y,(Z.W)))", "Id(b((J.Y),Z,W))", "xa(lMinv(Y,Z),Id(u(W)))"]},
        {"h": ["Id(nu((Y.(Z.W))))", "Id(b(J,Y,(Z.W)))", "bdelta_inv(lamM(Y),u(Z),u(W))"]},
        {"h": ["lt(Y,(Z.W))", "Id(b(Y,Z,W))"]}
      ]},
      "rhs": {"v": [
        {"h": ["nudelta_inv(b(Y,Z,W))", "Id(b(J,(Y.Z),W))", "Id(ten(lamM((Y.Z)),u(W)))"]},
        {"h": ["Id(b(Y,Z,W))", "lt((Y.Z),W)"]}
      ]}
    },
    {
      "name": "STR1-w-z-against-m-tilde",
      "structure": "horizontal_strength",
      "for": {"M": "M", "A": "D", "B": "D"},
      "source": "external: HF2 Fig. 4/5 family, compatibility of w and z with the m-tilde unit cell",
      "lhs": {"v": [
        {"h": ["Id(ten(u(A),ten(u(M),nu(B))))", "sw(M,J,A,B)", "Id(ten(roM(M),u((A.B))))"]},
        {"h": ["Id(ten(u(A),ten(u(M),nu(B))))", "Id(ten(u(A),b(M,J,B)))", "tdelta_inv(roM(M),u(A),u(B))"]},
        {"h": ["x(Id(u(A)),mt(M,B))", "Id(t(M,A,B))"]}
      ]},
      "rhs": {"v": [
        {"h": ["tdelta(u(M),u(A),nu(B))", "Id(ten(u(M),t(J,A,B)))", "Id(b(M,J,(A.B)))", "Id(ten(roM(M),u((A.B))))"]},
        {"h": ["Id(t(M,A,B))", "xa(IdM(u(M)),sz(A,B))", "Id(b(M,J,(A.B)))", "Id(ten(roM(M),u((A.B))))"]},
        {"h": ["Id(t(M,A,B))", "mt(M,(A.B))"]}
      ]}
    },
    {
      "name": "STR2-x-y-against-l",
      "structure": "horizontal_strength",
      "for": {"M": "M", "B": "D", "C": "D"},
      "source": "external: HF2 Fig. 3 family, compatibility of x and y with the l cell of the base monoidal structure",
      "lhs": {"v": [
        {"h": ["sy(M,I,B,C)", "Id(ten(u(M),lam((B.C))))"]},
        {"h": ["Id(a(I,B,(M.C)))", "Id(ten(u(I),t(M,B,C)))", "sx(M,(B.C))"]},
        {"h": ["Id(a(I,B,(M.C)))", "ldelta(t(M,B,C))"]},
        {"h": ["l_inv(B,(M.C))", "Id(t(M,B,C))"]}
      ]},
      "rhs": {"v": [
        {"h": ["Id(t(M,(I.B),C))", "xa(IdM(u(M)),l_inv(B,C))"]},
        "tdelta_inv(u(M),lam(B),u(C))"
      ]}
    },
    {
      "name": "Q1-bistrength-against-units",
      "structure": "bistrength",
      "for": {"A": "D", "B": "D", "C": "D"},
      "source": "external: HF2 Fig. 6, compatibility of q with z and z-prime",
      "lhs": {"v": [
        {"h": ["Id(ten(ten(u(A),nu(B)),u(C)))", "q(J,A,B,C)"]},
        {"h": ["x(sz(A,B),Id(u(C)))", "Id(s(J,(A.B),C))", "Id(ten(u(J),a(A,B,C)))"]},
        {"h": ["szp((A.B),C)", "Id(ten(u(J),a(A,B,C)))"]},
        "nudelta_inv(a(A,B,C))"
      ]},
      "rhs": {"v": [
        {"h": ["adelta(u(A),nu(B),u(C))", "Id(ten(u(A),s(J,B,C)))", "Id(t(J,A,(B.C)))"]},
        {"h": ["Id(a(A,B,C))", "x(Id(u(A)),szp(B,C))", "Id(t(J,A,(B.C)))"]},
        {"h": ["Id(a(A,B,C))", "sz(A,(B.C))"]}
      ]}
    }
  ]
}
)DBLCAT_SCHEMA";
}

}  // namespace dblcat
