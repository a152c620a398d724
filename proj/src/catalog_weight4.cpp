#include "catalog_util.hpp"

namespace amhs {

using namespace detail;

namespace {

// q_p B_{p-3}
Residue qb(CheckContext& c) { return c.q() * c.B(c.p() - 3); }
// (A - B)/2
Residue hb(CheckContext& c) { return c.c(1, 2) * (c.A() - c.Bc()); }
Residue h13(CheckContext& c) { return c.H({1, -3}); }

void w4(std::vector<CongruenceCheck>& out, const std::string& id, const std::string& anchor, Value lhs,
        Value rhs) {
    add(out, id, anchor, {}, 1, at_least(7), std::move(lhs), std::move(rhs));
}

void add_c15(std::vector<CongruenceCheck>& out) {
    w4(out, "C15.A", "A = -B_{p-3}", [](CheckContext& c) { return c.A(); },
       [](CheckContext& c) { return -c.B(c.p() - 3); });
    w4(out, "C15.G", "G = 0", [](CheckContext& c) { return c.G(); }, zero());
    w4(out, "C15.C", "C = B - 3A/4", [](CheckContext& c) { return c.C(); },
       [](CheckContext& c) { return c.Bc() - c.c(3, 4) * c.A(); });
    w4(out, "C15.K", "K = -3B - J + 3A", [](CheckContext& c) { return c.K(); },
       [](CheckContext& c) { return c.c(-3) * c.Bc() - c.J() + c.c(3) * c.A(); });
}

void add_c16(std::vector<CongruenceCheck>& out) {
    const std::string anchor = "depth-2 weight-4 values";
    w4(out, "C16.1,-3", anchor, H_of({1, -3}), [](CheckContext& c) { return c.Bc() - c.A(); });
    w4(out, "C16.-2,2", anchor, H_of({-2, 2}), [](CheckContext& c) { return c.c(2) * (c.Bc() - c.A()); });
    w4(out, "C16.1,-3.convolution", anchor, H_of({1, -3}), [](CheckContext& c) {
        Residue acc = c.c(0);
        for (std::uint64_t k = 0; k + 3 <= c.p(); ++k)
            acc += c.two(k) * c.B(unsigned(k)) * c.B(unsigned(c.p() - 3 - k));
        return acc;
    });
    w4(out, "C16.-1,3", anchor, H_of({-1, 3}), [](CheckContext& c) { return c.c(-1, 2) * qb(c); });
    w4(out, "C16.-3,1.I", anchor, [](CheckContext& c) { return c.c(3) * c.H({-3, 1}); },
       [](CheckContext& c) {
           return c.c(3) * c.A() - c.c(3) * c.Bc() + c.c(5, 2) * c.D() - c.c(2) * c.E() - c.c(2) * c.F() -
                  c.c(3, 2) * qb(c);
       });
    w4(out, "C16.-2,2.I", anchor, H_of({-2, 2}), [](CheckContext& c) {
        return c.c(2) * c.Bc() - c.c(2) * c.A() - c.c(5, 2) * c.D() + c.c(2) * c.E() + c.c(2) * c.F() +
               c.c(3, 2) * qb(c);
    });
    w4(out, "C16.-1,3.I", anchor, H_of({-1, 3}), [](CheckContext& c) {
        return c.c(5, 2) * c.D() - c.c(2) * c.E() - c.c(2) * c.F() - c.c(2) * qb(c);
    });
    w4(out, "C16.-3,1.II", anchor, H_of({-3, 1}),
       [](CheckContext& c) { return c.c(2) * c.D() - c.c(2) * c.E() - c.c(2) * qb(c); });
    w4(out, "C16.-2,2.II", anchor, H_of({-2, 2}), [](CheckContext& c) {
        return c.Bc() - c.A() + c.c(2) * c.E() - c.c(2) * c.D() + c.c(2) * qb(c);
    });
    w4(out, "C16.-1,3.II", anchor, H_of({-1, 3}), [](CheckContext& c) {
        return c.c(1, 3) * (-c.J() + c.c(3) * c.A() - c.c(3) * c.Bc() + c.c(2) * c.D() - c.c(2) * c.E());
    });
    w4(out, "C16.1,-3.DE", anchor, H_of({1, -3}),
       [](CheckContext& c) { return c.c(2) * c.E() - c.c(2) * c.D() + c.c(2) * qb(c); });
}

void add_c17(std::vector<CongruenceCheck>& out) {
    const std::string anchor = "depth-3 weight-4 values";
    w4(out, "C17.1,-1,-2", anchor, H_of({1, -1, -2}),
       [](CheckContext& c) { return c.c(1, 2) * h13(c) + c.c(1, 2) * c.J(); });
    w4(out, "C17.1,-2,-1", anchor, H_of({1, -2, -1}),
       [](CheckContext& c) { return h13(c) - c.c(5, 4) * qb(c); });
    w4(out, "C17.2,-1,-1", anchor, H_of({2, -1, -1}),
       [](CheckContext& c) { return -h13(c) - c.c(1, 2) * c.J() + c.c(3, 4) * qb(c); });
    w4(out, "C17.1,1,-2", anchor, [](CheckContext& c) { return c.c(2) * c.H({1, 1, -2}); },
       [](CheckContext& c) { return -c.H({-3, 1}); });
}

void add_c18(std::vector<CongruenceCheck>& out) {
    const std::string anchor = "weight-4 table";
    w4(out, "C18.-2,1,1", anchor, H_of({-2, 1, 1}), hb);
    for (std::vector<int> s : std::vector<std::vector<int>>{{4}, {-4}, {2, 2}, {-2, -2}, {1, 3}, {1, -2, 1}, {-1, -2, -1}})
        w4(out, "C18.zero." + tag(s), anchor, H_of(s), zero());
    struct Entry {
        std::vector<int> s;
        Value v;
    };
    std::vector<Entry> table{
        {{1, -3}, [](CheckContext& c) { return c.c(-2) * hb(c); }},
        {{2, -2}, [](CheckContext& c) { return c.c(4) * hb(c); }},
        {{1, -1, 2}, [](CheckContext& c) { return c.c(3) * hb(c); }},
        {{-1, -3}, [](CheckContext& c) { return c.c(1, 2) * qb(c); }},
        {{3, -1}, [](CheckContext& c) { return c.c(1, 2) * qb(c); }},
        {{1, -1, -2}, [](CheckContext& c) { return -hb(c) + c.c(1, 2) * c.J(); }},
        {{-2, -1, -1}, [](CheckContext& c) { return c.c(2) * hb(c) - qb(c); }},
        {{-1, 2, 1}, [](CheckContext& c) { return -hb(c) + c.c(5, 4) * qb(c); }},
        {{-1, 1, 2}, [](CheckContext& c) { return c.c(2) * hb(c) - c.c(3, 4) * qb(c); }},
        {{-2, 1, -1}, [](CheckContext& c) { return c.c(3) * hb(c) - c.c(1, 2) * c.J() + c.c(3, 4) * qb(c); }},
        {{1, -2, -1}, [](CheckContext& c) { return c.c(-2) * hb(c) - c.c(5, 4) * qb(c); }},
        {{-1, 2, -1}, [](CheckContext& c) { return c.c(-4) * hb(c) + c.J() - c.c(5, 2) * qb(c); }},
        {{2, -1, -1}, [](CheckContext& c) { return c.c(2) * hb(c) - c.c(1, 2) * c.J() + c.c(3, 4) * qb(c); }},
    };
    for (auto& e : table) w4(out, "C18." + tag(e.s), anchor, H_of(e.s), e.v);
}

void add_c19_c20(std::vector<CongruenceCheck>& out) {
    const std::string anchor = "depth-4 weight-4 values";
    auto q4 = [](CheckContext& c) { return c.q().pow(4); };
    w4(out, "C19.1,-1,-1,1", anchor, H_of({1, -1, -1, 1}),
       [q4](CheckContext& c) { return c.c(-1, 2) * h13(c) - c.c(1, 2) * (c.J() + q4(c)); });
    Value v2 = [q4](CheckContext& c) {
        return c.c(1, 24) * (c.c(6) * c.J() + c.c(7) * qb(c) + c.c(8) * q4(c));
    };
    w4(out, "C19.-1,-1,1,1", anchor, H_of({-1, -1, 1, 1}), v2);
    w4(out, "C19.1,1,-1,-1", anchor, H_of({1, 1, -1, -1}), v2);
    Value v3 = [q4](CheckContext& c) { return c.c(-1, 12) * (qb(c) + c.c(2) * q4(c)); };
    w4(out, "C19.-1,1,-1,1", anchor, H_of({-1, 1, -1, 1}), v3);
    w4(out, "C19.1,-1,1,-1", anchor, H_of({1, -1, 1, -1}), v3);
    w4(out, "C19.-1,1,1,-1", anchor, H_of({-1, 1, 1, -1}),
       [q4](CheckContext& c) { return c.c(1, 2) * h13(c) + c.c(1, 12) * (c.c(7) * qb(c) + c.c(2) * q4(c)); });

    w4(out, "C20.1,1,-1,1", anchor, H_of({1, 1, -1, 1}), [](CheckContext& c) {
        return c.c(3) * c.H({-1, 1, 1, 1}) + c.c(2) * hb(c) + c.c(1, 2) * qb(c);
    });
    w4(out, "C20.-1,-1,1,-1", anchor, H_of({-1, -1, 1, -1}), [q4](CheckContext& c) {
        return c.c(3) * c.H({1, -1, -1, -1}) + c.c(6) * hb(c) - c.c(4) * qb(c) - c.c(2) * q4(c);
    });
    w4(out, "C20.-1,-1,-1,-1", anchor, H_of({-1, -1, -1, -1}),
       [q4](CheckContext& c) { return c.c(1, 3) * qb(c) + c.c(2, 3) * q4(c); });
}

void add_c21(std::vector<CongruenceCheck>& out) {
    struct Spot {
        std::uint64_t p;
        std::vector<long long> printed;
    };
    for (const Spot& spot : {Spot{1093, {1023, 529, 670, 952}}, Spot{3511, {1618, 2160, 1620, 540}}}) {
        auto values = [printed = spot.printed](CheckContext& c) {
            std::vector<Residue> v;
            for (long long x : printed) v.push_back(c.c(x));
            return v;
        };
        std::uint64_t p0 = spot.p;
        Pre only = [p0](std::uint64_t p) { return p == p0; };
        std::string ps = ".p" + std::to_string(p0);
        add_vector(out, "C21" + ps, "[J, H(1,-3), H(1,-1,-1,-1), H(-1,1,1,1)] at a Wieferich prime", {long(p0)}, 1,
                   only,
                   [](CheckContext& c) {
                       return std::vector<Residue>{c.J(), c.H({1, -3}), c.H({1, -1, -1, -1}), c.H({-1, 1, 1, 1})};
                   },
                   values);
        // the printed residues match the reversed compositions
        add_vector(out, "C21.reversed" + ps, "[J, H(-3,1), H(-1,-1,-1,1), H(1,1,1,-1)] at a Wieferich prime",
                   {long(p0)}, 1, only,
                   [](CheckContext& c) {
                       return std::vector<Residue>{c.J(), c.H({-3, 1}), c.H({-1, -1, -1, 1}), c.H({1, 1, 1, -1})};
                   },
                   values);
    }
}

}  // namespace

void add_weight4_families(std::vector<CongruenceCheck>& out, const CatalogOptions&) {
    add_c15(out);
    add_c16(out);
    add_c17(out);
    add_c18(out);
    add_c19_c20(out);
    add_c21(out);
}

}  // namespace amhs
