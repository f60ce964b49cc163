#include "rplie/catalog.hpp"

#include <stdexcept>

namespace rplie {

namespace {

// Row assembly helper; indices are 1-based to match the printed tables.
struct Rb {
    int n;
    LieAlgebra g;
    Mat rmat, gram;
    explicit Rb(int dim) : n(dim), g(dim), rmat(dim, dim), gram(Mat::identity(dim)) {}
    void br(int i, int j, std::initializer_list<std::pair<Scalar, int>> terms) {
        Vec v(n, Scalar(0));
        for (const auto& t : terms) v[t.second - 1] += t.first;
        g.set_bracket(i - 1, j - 1, v);
    }
    void rset(int i, int j, const Scalar& v) {
        rmat.at(i - 1, j - 1) = v;
        rmat.at(j - 1, i - 1) = -v;
    }
    void mset(int i, int j, const Scalar& v) {
        gram.at(i - 1, j - 1) = v;
        gram.at(j - 1, i - 1) = v;
    }
    AssembledTriple done() { return {g, Bivector(rmat), Metric(gram)}; }
};

Mat E(int i, int j) {
    Mat m(4, 4);
    m.at(i - 1, j - 1) = Scalar(1);
    return m;
}

// Parameter list shorthand: "name", "name!" nonzero, "name+" positive,
// "name(" in (0,1), "name[" in [0,1), "name>" greater than one,
// "name?" discrete choice {1,2}.
Family fam(int table, int row, const std::string& spec) {
    Family f;
    f.table = table;
    f.row = row;
    f.id = "T" + std::to_string(table) + ".R" + std::to_string(row);
    size_t i = 0;
    while (i < spec.size()) {
        size_t j = spec.find(' ', i);
        std::string tok = spec.substr(i, j == std::string::npos ? j : j - i);
        i = j == std::string::npos ? spec.size() : j + 1;
        if (tok.empty()) continue;
        ParamKind kind = ParamKind::Free;
        char last = tok.back();
        if (last == '!') kind = ParamKind::Nonzero;
        if (last == '+') kind = ParamKind::Positive;
        if (last == '(') kind = ParamKind::UnitOpen;
        if (last == '[') kind = ParamKind::UnitHalf;
        if (last == '>') kind = ParamKind::GreaterOne;
        if (last == '?') kind = ParamKind::Choice12;
        std::string name = kind == ParamKind::Free ? tok : tok.substr(0, tok.size() - 1);
        f.params.push_back({name, kind});
        switch (kind) {
            case ParamKind::Nonzero:
                f.conditions.push_back({name + " != 0", [name](const Params& p) {
                                            return !p.at(name).is_zero();
                                        }});
                break;
            case ParamKind::Positive:
                f.conditions.push_back({name + " > 0", [name](const Params& p) {
                                            return p.at(name).is_positive();
                                        }});
                break;
            case ParamKind::UnitOpen:
                f.conditions.push_back({"0 < " + name + " < 1", [name](const Params& p) {
                                            return p.at(name).is_positive() &&
                                                   p.at(name).less_than(p.at(name).int_like(1));
                                        }});
                break;
            case ParamKind::UnitHalf:
                f.conditions.push_back({"0 <= " + name + " < 1", [name](const Params& p) {
                                            return !p.at(name).is_negative() &&
                                                   p.at(name).less_than(p.at(name).int_like(1));
                                        }});
                break;
            case ParamKind::GreaterOne:
                f.conditions.push_back({name + " > 1", [name](const Params& p) {
                                            return p.at(name).int_like(1).less_than(p.at(name));
                                        }});
                break;
            default:
                break;
        }
    }
    return f;
}

void add_cond(Family& f, const std::string& desc, std::function<bool(const Params&)> fn) {
    f.conditions.push_back({desc, std::move(fn)});
}

void add_tables_1_2(std::vector<Family>& out) {
    {
        Family f = fam(1, 1, "a! b alpha!");
        f.build = [](const Params& q) {
            Rb b(3);
            b.br(1, 2, {{q.at("a"), 1}});
            b.br(3, 2, {{q.at("b"), 1}});
            b.rset(1, 2, q.at("alpha"));
            return b.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(1, 2, "b c d alpha!");
        f.build = [](const Params& q) {
            Rb bb(3);
            bb.br(3, 1, {{-q.at("b"), 1}, {q.at("c"), 2}});
            bb.br(3, 2, {{q.at("d"), 1}, {q.at("b"), 2}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 1, "a! b c d alpha!");
        f.build = [](const Params& q) {
            Rb b(4);
            b.br(1, 2, {{q.at("a"), 1}});
            b.br(3, 2, {{q.at("b"), 1}, {q.at("c"), 4}});
            b.br(4, 2, {{q.at("d"), 1}, {-q.at("c"), 3}});
            b.rset(1, 2, q.at("alpha"));
            return b.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 2, "a! b c! d alpha!");
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{q.at("a"), 1}});
            bb.br(3, 2, {{q.at("b"), 1}});
            bb.br(4, 2, {{q.at("d"), 1}});
            bb.br(3, 4, {{-q.at("c") * q.at("b") / q.at("a"), 1}, {q.at("c"), 3}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 3, "a b alpha!");
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 4, "a b c x y z alpha!");
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {q.at("c"), 3}});
            bb.br(4, 1, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(4, 2, {{q.at("z"), 1}, {-q.at("x"), 2}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    auto block_metric = [](Rb& bb, const Params& q) {
        bb.mset(3, 3, q.at("mu"));
        bb.mset(3, 4, q.at("nu"));
        bb.mset(4, 4, q.at("rho2"));
    };
    {
        Family f = fam(2, 5, "a b mu+ nu rho2+ alpha!");
        add_cond(f, "mu*rho2 > nu^2", [](const Params& q) {
            return (q.at("nu") * q.at("nu")).less_than(q.at("mu") * q.at("rho2"));
        });
        f.build = [block_metric](const Params& q) {
            Rb bb(4);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(2), 4}});
            bb.br(3, 1, {{Scalar(1), 1}});
            bb.br(3, 2, {{Scalar(-1), 2}});
            bb.br(4, 2, {{Scalar(1), 1}});
            bb.rset(1, 2, q.at("alpha"));
            block_metric(bb, q);
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 6, "a b mu+ nu rho2+ alpha!");
        add_cond(f, "mu*rho2 > nu^2", [](const Params& q) {
            return (q.at("nu") * q.at("nu")).less_than(q.at("mu") * q.at("rho2"));
        });
        f.build = [block_metric](const Params& q) {
            Rb bb(4);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(-2), 4}});
            bb.br(3, 1, {{Scalar(1), 1}});
            bb.br(3, 2, {{Scalar(-1), 2}});
            bb.br(4, 1, {{Scalar(1), 2}});
            bb.rset(1, 2, q.at("alpha"));
            block_metric(bb, q);
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 7, "a b x! mu+ nu rho2+ alpha!");
        add_cond(f, "mu*rho2 > nu^2", [](const Params& q) {
            return (q.at("nu") * q.at("nu")).less_than(q.at("mu") * q.at("rho2"));
        });
        f.build = [block_metric](const Params& q) {
            Rb bb(4);
            Scalar x = q.at("x");
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(-2), 3}});
            bb.br(3, 1, {{Scalar(1), 1}, {x, 2}});
            bb.br(3, 2, {{-(Scalar(1) / x), 1}, {Scalar(-1), 2}});
            bb.br(4, 1, {{x, 2}});
            bb.br(4, 2, {{Scalar(1) / x, 1}});
            bb.rset(1, 2, q.at("alpha"));
            block_metric(bb, q);
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(2, 8, "a b x y! z alpha!");
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}});
            bb.br(3, 2, {{q.at("x"), 1}, {q.at("y"), 4}});
            bb.br(4, 2, {{q.at("z"), 1}, {-q.at("y"), 3}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

void add_table_3(std::vector<Family>& out) {
    {
        Family f = fam(3, 1, "a+ b+ c+ d+ alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(1), 2}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("c"));
            bb.mset(4, 4, q.at("d"));
            return bb.done();
        };
        f.symplectic_derivations = {E(2, 1), E(3, 3) - E(4, 4), E(4, 3), E(3, 4)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 2, "a+ b+ c+ alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(-1), 3}});
            bb.br(1, 3, {{Scalar(1), 2}});
            bb.rset(1, 4, q.at("alpha"));
            bb.rset(2, 3, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("b"));
            bb.mset(4, 4, q.at("c"));
            return bb.done();
        };
        f.symplectic_derivations = {E(2, 3) - E(3, 2), E(4, 1)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 3, "a+ b+ c+ d+ alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(1), 2}});
            bb.br(3, 4, {{Scalar(1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("c"));
            bb.mset(4, 4, q.at("d"));
            return bb.done();
        };
        f.symplectic_derivations = {E(2, 1), E(4, 3)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 4, "a+ b+ c+ delta+ alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(4, 1, {{Scalar(1), 1}});
            bb.br(4, 2, {{-q.at("delta"), 3}});
            bb.br(4, 3, {{q.at("delta"), 2}});
            bb.rset(1, 4, q.at("alpha"));
            bb.rset(2, 3, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("b"));
            bb.mset(4, 4, q.at("c"));
            return bb.done();
        };
        f.symplectic_derivations = {E(1, 4), E(2, 3) - E(3, 2)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 5, "a+ b+ mu+ alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar::ratio(1, 2), 1}});
            bb.br(4, 2, {{Scalar::ratio(1, 2), 2}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, -q.at("alpha"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("mu") * q.at("b"));
            bb.mset(3, 3, q.at("mu") * q.at("a"));
            bb.mset(4, 4, q.at("b"));
            return bb.done();
        };
        f.symplectic_derivations = {E(3, 4), E(2, 2) - E(1, 1), E(1, 2) + E(2, 1)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 6, "a+ alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar(2), 1}});
            bb.br(4, 2, {{Scalar(-1), 2}});
            bb.rset(2, 3, q.at("alpha"));
            bb.rset(1, 4, q.at("alpha"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("a"));
            bb.mset(3, 3, q.at("a") * 2);
            bb.mset(4, 4, q.at("a") * 2);
            return bb.done();
        };
        f.symplectic_derivations = {E(1, 4).scaled(Scalar(2)) - E(3, 2)};
        out.push_back(std::move(f));
    }
    {
        Family f = fam(3, 7, "a+ alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(4);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar::ratio(1, 2), 1}, {Scalar(-1), 2}});
            bb.br(4, 2, {{Scalar(1), 1}, {Scalar::ratio(1, 2), 2}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, -q.at("alpha"));
            for (int i = 1; i <= 4; ++i) bb.mset(i, i, q.at("a"));
            return bb.done();
        };
        f.symplectic_derivations = {E(3, 4), E(1, 2) - E(2, 1)};
        out.push_back(std::move(f));
    }
}

void add_table_4(std::vector<Family>& out) {
    {
        Family f = fam(4, 1, "a+ b+ c+ d+ e+ x y z t alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 2}});
            bb.br(5, 1, {{q.at("x"), 2}});
            bb.br(5, 3, {{q.at("y"), 3}, {q.at("t"), 4}});
            bb.br(5, 4, {{q.at("z"), 3}, {-q.at("y"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("c"));
            bb.mset(4, 4, q.at("d"));
            bb.mset(5, 5, q.at("e"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 2, "a+ b+ c+ d+ x y alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(-1), 3}});
            bb.br(1, 3, {{Scalar(1), 2}});
            bb.br(5, 1, {{q.at("y"), 4}});
            bb.br(5, 2, {{-q.at("x"), 3}});
            bb.br(5, 3, {{q.at("x"), 2}});
            bb.rset(1, 4, q.at("alpha"));
            bb.rset(2, 3, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("b"));
            bb.mset(4, 4, q.at("c"));
            bb.mset(5, 5, q.at("d"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 3, "a+ b+ c+ d+ e+ x y alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 2}});
            bb.br(3, 4, {{Scalar(1), 4}});
            bb.br(5, 1, {{q.at("x"), 2}});
            bb.br(5, 3, {{q.at("y"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("c"));
            bb.mset(4, 4, q.at("d"));
            bb.mset(5, 5, q.at("e"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 4, "a+ b+ c+ d+ delta+ x y alpha! beta!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(4, 1, {{Scalar(1), 1}});
            bb.br(4, 2, {{-q.at("delta"), 3}});
            bb.br(4, 3, {{q.at("delta"), 2}});
            bb.br(5, 2, {{-q.at("y"), 3}});
            bb.br(5, 3, {{q.at("y"), 2}});
            bb.br(5, 4, {{q.at("x"), 1}});
            bb.rset(1, 4, q.at("alpha"));
            bb.rset(2, 3, q.at("beta"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("b"));
            bb.mset(3, 3, q.at("b"));
            bb.mset(4, 4, q.at("c"));
            bb.mset(5, 5, q.at("d"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 5, "a+ b+ c+ mu+ x y z alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar::ratio(1, 2), 1}});
            bb.br(4, 2, {{Scalar::ratio(1, 2), 2}});
            bb.br(5, 1, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(5, 2, {{q.at("y"), 1}, {-q.at("x"), 2}});
            bb.br(5, 4, {{q.at("z"), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, -q.at("alpha"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("mu") * q.at("b"));
            bb.mset(3, 3, q.at("mu") * q.at("a"));
            bb.mset(4, 4, q.at("b"));
            bb.mset(5, 5, q.at("c"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 6, "a+ b+ x alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar(2), 1}});
            bb.br(4, 2, {{Scalar(-1), 2}});
            bb.br(5, 2, {{q.at("x"), 3}});
            bb.br(5, 4, {{q.at("x") * (-2), 1}});
            bb.rset(2, 3, q.at("alpha"));
            bb.rset(1, 4, q.at("alpha"));
            bb.mset(1, 1, q.at("a"));
            bb.mset(2, 2, q.at("a"));
            bb.mset(3, 3, q.at("a") * 2);
            bb.mset(4, 4, q.at("a") * 2);
            bb.mset(5, 5, q.at("b"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(4, 7, "a+ b+ x y alpha!");
        f.declared_rank = 4;
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 3}});
            bb.br(4, 3, {{Scalar(1), 3}});
            bb.br(4, 1, {{Scalar::ratio(1, 2), 1}, {Scalar(-1), 2}});
            bb.br(4, 2, {{Scalar(1), 1}, {Scalar::ratio(1, 2), 2}});
            bb.br(5, 1, {{-q.at("x"), 2}});
            bb.br(5, 2, {{q.at("x"), 1}});
            bb.br(5, 4, {{q.at("y"), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.rset(3, 4, -q.at("alpha"));
            for (int i = 1; i <= 4; ++i) bb.mset(i, i, q.at("a"));
            bb.mset(5, 5, q.at("b"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

void add_table_5(std::vector<Family>& out) {
    {
        Family f = fam(5, 1, "b c! d f mu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") * q.at("mu"), 1}, {-q.at("c"), 4}});
            bb.br(4, 2, {{q.at("d") * q.at("mu"), 1}, {q.at("c"), 3}});
            bb.br(5, 2, {{q.at("f"), 1}});
            bb.br(3, 4, {{-q.at("f"), 1}, {Scalar(1), 5}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 2, "b c d mu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b"), 1}});
            bb.br(4, 2, {{q.at("c"), 1}});
            bb.br(5, 2, {{q.at("d") * q.at("mu"), 1}});
            bb.br(3, 5, {{q.at("b"), 1}, {Scalar(-1), 3}});
            bb.br(4, 5, {{-q.at("c"), 1}, {Scalar(1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(5, 5, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 3, "b c d x> mu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") + q.at("c"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("x") + q.at("b"), 1}});
            bb.br(5, 2, {{q.at("d") * q.at("mu"), 1}});
            bb.br(3, 5, {{q.at("b") + q.at("c"), 1}, {Scalar(-1), 3}});
            bb.br(4, 5, {{-(q.at("x") * q.at("c") + q.at("b")), 1}, {Scalar(1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 4, Scalar(1));
            bb.mset(4, 4, q.at("x"));
            bb.mset(5, 5, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 4, "b c d mu+ nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("mu"), 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{-(q.at("mu") * q.at("c")), 1}, {Scalar(1), 4}});
            bb.br(4, 5, {{q.at("b"), 1}, {Scalar(-1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(4, 4, q.at("mu"));
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    auto distinct3 = [](Family& f) {
        add_cond(f, "mu, nu, rho2 pairwise distinct", [](const Params& q) {
            return !(q.at("mu") == q.at("nu")) && !(q.at("mu") == q.at("rho2")) &&
                   !(q.at("nu") == q.at("rho2"));
        });
    };
    {
        Family f = fam(5, 5, "b c d mu+ nu+ rho2+ xi+ alpha!");
        distinct3(f);
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") * q.at("mu"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("nu"), 1}});
            bb.br(5, 2, {{q.at("d") * q.at("rho2"), 1}});
            bb.br(3, 4, {{q.at("rho2") * q.at("d") * (-2), 1}, {Scalar(2), 5}});
            bb.br(3, 5, {{q.at("nu") * q.at("c") * 2, 1}, {Scalar(-2), 4}});
            bb.br(4, 5, {{q.at("mu") * q.at("b") * 2, 1}, {Scalar(-2), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("xi"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("rho2"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 6, "b c d lambda! mu+ nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar l = q.at("lambda");
            Scalar den = Scalar(1) + l * l;
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") * q.at("mu"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("nu"), 1}, {-l, 5}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}, {l, 4}});
            bb.br(3, 4, {{-(Scalar(2) * q.at("nu") * (l * q.at("c") + q.at("d")) / den), 1},
                         {Scalar(2), 5}});
            bb.br(3, 5, {{Scalar(2) * q.at("nu") * (q.at("c") - l * q.at("d")) / den, 1},
                         {Scalar(-2), 4}});
            bb.br(4, 5, {{Scalar(2) * q.at("mu") * q.at("b"), 1}, {Scalar(-2), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 7, "b c d mu+ nu+ rho2+ xi+ alpha!");
        distinct3(f);
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") * q.at("mu"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("nu"), 1}});
            bb.br(5, 2, {{q.at("d") * q.at("rho2"), 1}});
            bb.br(3, 4, {{-(q.at("rho2") * q.at("d")), 1}, {Scalar(1), 5}});
            bb.br(3, 5, {{q.at("nu") * q.at("c"), 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{-(q.at("mu") * q.at("b")), 1}, {Scalar(1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("xi"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("rho2"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 8, "b c d lambda! mu+ nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar l = q.at("lambda");
            Scalar den = Scalar(1) + l * l;
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b") * q.at("mu"), 1}});
            bb.br(4, 2, {{q.at("c") * q.at("nu"), 1}, {-l, 5}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}, {l, 4}});
            bb.br(3, 4, {{-(q.at("nu") * (l * q.at("c") + q.at("d")) / den), 1}, {Scalar(1), 5}});
            bb.br(3, 5, {{q.at("nu") * (q.at("c") - l * q.at("d")) / den, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{-(q.at("mu") * q.at("b")), 1}, {Scalar(1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(5, 9, "b c d u v w mu+ rho2+ alpha!");
        auto build_with = [](const Params& q, bool corrected) {
            Rb bb(5);
            Scalar b = q.at("b"), c = q.at("c"), d = q.at("d");
            Scalar u = q.at("u"), v = q.at("v"), w = q.at("w"), mu = q.at("mu");
            Scalar den = Scalar(1) + u * u + v * v + w * w;
            Scalar x = -(mu * (b * u * w - c * u * v + d * u * u + b * v + c * w + d)) / den;
            Scalar ycross = corrected ? d * u * v : d * u * w;
            Scalar y = mu * (-(b * v * w) + c * v * v - ycross + b * u - d * w + c) / den;
            Scalar z = -(mu * (b * w * w - c * v * w + d * u * w - c * u - d * v + b)) / den;
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{b * mu, 1}, {-u, 4}, {-v, 5}});
            bb.br(4, 2, {{c * mu, 1}, {u, 3}, {-w, 5}});
            bb.br(5, 2, {{d * mu, 1}, {v, 3}, {w, 4}});
            bb.br(3, 4, {{x, 1}, {Scalar(1), 5}});
            bb.br(3, 5, {{y, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{z, 1}, {Scalar(1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 3, mu);
            bb.mset(4, 4, mu);
            bb.mset(5, 5, mu);
            return bb.done();
        };
        f.build = [build_with](const Params& q) { return build_with(q, false); };
        f.corrected_build = [build_with](const Params& q) { return build_with(q, true); };
        f.correction_note = "second bracket coefficient: the cross term d*u*w reads d*u*v";
        out.push_back(std::move(f));
    }
}

void add_table_6(std::vector<Family>& out) {
    {
        Family f = fam(6, 1, "c d f lambda! mu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar l = q.at("lambda"), c = q.at("c"), ff = q.at("f");
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{ff + c * l + ff * l * l, 1}, {-l, 4}});
            bb.br(4, 2, {{c, 1}, {l, 3}});
            bb.br(5, 2, {{q.at("d") * q.at("mu"), 1}});
            bb.br(3, 5, {{ff, 1}, {Scalar(-1), 3}});
            bb.br(4, 5, {{l * ff + c, 1}, {Scalar(-1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(5, 5, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(6, 2, "b c d f mu nu+ rho2+ alpha!");
        add_cond(f, "f = 1 or f <= 0", [](const Params& q) {
            return q.at("f") == q.at("f").int_like(1) || !q.at("f").is_positive();
        });
        add_cond(f, "0 < mu < |f|", [](const Params& q) {
            return q.at("mu").is_positive() && q.at("mu").less_than(q.at("f").abs());
        });
        f.finish_sample = [](Params& p, Sampler& s) {
            p["f"] = s.range(0, 1) ? Scalar(1) : -s.draw(ParamKind::Positive);
            p["mu"] = p["f"].abs() * s.draw(ParamKind::UnitOpen);
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar ff = q.at("f"), mu = q.at("mu");
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{q.at("b"), 1}});
            bb.br(4, 2, {{q.at("c") * mu, 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{mu * q.at("c"), 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{-ff * q.at("b") + Scalar(2) * mu * q.at("c"), 1},
                         {ff, 3},
                         {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(4, 4, mu);
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(6, 3, "b c d mu( nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar mu = q.at("mu"), b = q.at("b"), c = q.at("c");
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{b + c * mu, 1}});
            bb.br(4, 2, {{c + b * mu, 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{mu * b + c, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{(Scalar(2) - mu) * c + (mu * 2 - Scalar(1)) * b, 1},
                         {Scalar(1), 3},
                         {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 4, mu);
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(6, 4, "b c d f mu> nu+ rho2+ alpha!");
        add_cond(f, "c > mu", [](const Params& q) { return q.at("mu").less_than(q.at("c")); });
        f.finish_sample = [](Params& p, Sampler& s) {
            p["c"] = p["mu"] + s.draw(ParamKind::Positive);
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar mu = q.at("mu"), b = q.at("b"), c = q.at("c"), ff = q.at("f");
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{b + c, 1}});
            bb.br(4, 2, {{b + c * mu, 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{b + c * mu, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{(Scalar(2) - ff) * b + (mu * 2 - ff) * c, 1},
                         {ff, 3},
                         {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 4, Scalar(1));
            bb.mset(4, 4, mu);
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(6, 5, "b c d nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar b = q.at("b"), c = q.at("c"), half = Scalar::ratio(1, 2);
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{b + half * c, 1}});
            bb.br(4, 2, {{c + half * b, 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{c + half * b, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{b + c * 2, 1}, {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(2, 2, q.at("rho2"));
            bb.mset(3, 4, half);
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(6, 6, "b c d f mu[ nu+ rho2+ alpha!");
        f.needs_float = true;
        add_cond(f, "0 < f < 1", [](const Params& q) {
            return q.at("f").is_positive() && q.at("f").less_than(q.at("f").int_like(1));
        });
        f.finish_sample = [](Params& p, Sampler& s) {
            long den = s.range(2, 5);
            long num = s.range(1, den - 1);
            Scalar sv = Scalar::ratio(num, den);
            p["f"] = Scalar(1) - sv * sv;
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar ff = q.at("f"), mu = q.at("mu"), b = q.at("b"), c = q.at("c");
            Scalar sv(0);
            if (!exact_sqrt(Scalar(1) - ff, sv))
                throw std::domain_error(
                    "instantiate: sqrt(1 - f) is irrational; requires float mode");
            Scalar one(1), two(2);
            Scalar x = (((mu + one) * b + (mu - one) * c) * ff - two * b) /
                       (two * ff * ff * (ff - one));
            Scalar y = ((mu - one) * (c * ff + b)) / (two * ff * (ff - one));
            Scalar t = ((one - mu) * c * ff + ((ff - two) * mu + ff) * b) /
                       (two * ff * (one - ff));
            bb.br(1, 2, {{Scalar(1), 1}});
            bb.br(3, 2, {{x, 1}});
            bb.br(4, 2, {{y, 1}});
            bb.br(5, 2, {{q.at("d") * q.at("nu"), 1}});
            bb.br(3, 5, {{y, 1}, {Scalar(-1), 4}});
            bb.br(4, 5, {{t, 1}, {ff, 3}, {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            Mat big(5, 5);
            big.at(0, 0) = Scalar(1);
            big.at(1, 1) = q.at("rho2");
            big.at(2, 2) = Scalar(1);
            big.at(2, 3) = mu;
            big.at(3, 2) = mu;
            big.at(3, 3) = Scalar(1);
            big.at(4, 4) = q.at("nu");
            Mat at = Mat::identity(5);
            at.at(2, 2) = (one + sv) / (-(two * ff * sv));
            at.at(2, 3) = -(one / (two * sv));
            at.at(3, 2) = (one - sv) / (two * ff * sv);
            at.at(3, 3) = one / (two * sv);
            bb.gram = at.transpose() * big * at;
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

void add_table_7(std::vector<Family>& out) {
    {
        Family f = fam(7, 1, "a b c d f g mu+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(1), 5}});
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 2, "a b c d f g mu+ x> variant? alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}});
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(-1), 3}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {Scalar(1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            if (q.at("variant") == q.at("variant").int_like(2)) {
                bb.mset(3, 4, Scalar(1));
                bb.mset(4, 4, q.at("x"));
            }
            bb.mset(5, 5, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 3, "a b c d f g mu+ nu+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}});
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(1), 4}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {Scalar(-1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(4, 4, q.at("mu"));
            bb.mset(5, 5, q.at("nu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 4, "a b c d f g mu+ nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(2), 5}});
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(-2), 4}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {Scalar(-2), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("rho2"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 5, "a b c d f g mu+ nu+ rho2+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 4, {{q.at("a"), 1}, {q.at("b"), 2}, {Scalar(1), 5}});
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(-1), 4}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {Scalar(1), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("rho2"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 6, "c d f g mu+ alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(-1), 3}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {Scalar(-1), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(5, 5, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(7, 7, "c d f g x alpha!");
        f.partial = true;  // the table defers the metric list; identity encoded
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(3, 5, {{q.at("c"), 1}, {q.at("d"), 2}, {Scalar(-1), 4}});
            bb.br(4, 5, {{q.at("f"), 1}, {q.at("g"), 2}, {q.at("x"), 3}, {Scalar(-2), 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

void add_table_8(std::vector<Family>& out) {
    {
        Family f = fam(8, 1, "mu+ nu+ rho2+ l11 l12 l13 l21 l22 l23 alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar l11 = q.at("l11"), l12 = q.at("l12"), l13 = q.at("l13");
            Scalar l21 = q.at("l21"), l22 = q.at("l22"), l23 = q.at("l23");
            bb.br(3, 1, {{Scalar(-1), 2}});
            bb.br(3, 2, {{Scalar(1), 1}});
            bb.br(4, 1, {{Scalar(1), 2}});
            bb.br(4, 2, {{Scalar(1), 1}});
            bb.br(5, 1, {{Scalar(1), 1}});
            bb.br(5, 2, {{Scalar(-1), 2}});
            bb.br(3, 4, {{l22 - l21 - l13 * 2, 1}, {-(l12 + l11 + l23 * 2), 2}, {Scalar(2), 5}});
            bb.br(3, 5, {{l23 - l11 + l12 * 2, 1}, {-(l13 - l21 - l22 * 2), 2}, {Scalar(-2), 4}});
            bb.br(4, 5, {{l23 - l12 + l11 * 2, 1}, {l13 + l22 + l21 * 2, 2}, {Scalar(-2), 3}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 3, q.at("mu"));
            bb.mset(4, 4, q.at("nu"));
            bb.mset(5, 5, q.at("rho2"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 2, "a! b! c u v z t r s x y alpha!");
        add_cond(f, "(3a+2b)y = 0", [](const Params& q) {
            return ((q.at("a") * 3 + q.at("b") * 2) * q.at("y")).is_zero();
        });
        add_cond(f, "(a+2b)x - 2tu + 2yv = 0", [](const Params& q) {
            return ((q.at("a") + q.at("b") * 2) * q.at("x") -
                    q.at("t") * q.at("u") * 2 + q.at("y") * q.at("v") * 2)
                .is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            if ((p["a"] * 3 + p["b"] * 2).is_zero() || (p["a"] + p["b"] * 2).is_zero())
                return false;
            p["y"] = Scalar(0);
            p["x"] = p["t"] * p["u"] * 2 / (p["a"] + p["b"] * 2);
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a");
            bb.br(4, 2, {{q.at("u"), 1}});
            bb.br(5, 1, {{-(a / 2), 1}});
            bb.br(5, 2, {{q.at("v"), 1}, {a / 2, 2}});
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}, {q.at("b"), 3}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("c"), 3}, {a, 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 3, "a! u v z t r s x mu( alpha!");
        add_cond(f, "ax - 2tu = 0", [](const Params& q) {
            return (q.at("a") * q.at("x") - q.at("t") * q.at("u") * 2).is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            p["x"] = p["t"] * p["u"] * 2 / p["a"];
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a");
            bb.br(4, 2, {{q.at("u"), 1}});
            bb.br(5, 1, {{-(a / 2), 1}});
            bb.br(5, 2, {{q.at("v"), 1}, {a / 2, 2}});
            bb.br(3, 4, {{q.at("x"), 1}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {a, 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 4, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 4, "a! b! c u v z t r s x y alpha!");
        add_cond(f, "(3a+2b)x = 0", [](const Params& q) {
            return ((q.at("a") * 3 + q.at("b") * 2) * q.at("x")).is_zero();
        });
        add_cond(f, "(a+2b)y - 2zu + 2xv = 0", [](const Params& q) {
            return ((q.at("a") + q.at("b") * 2) * q.at("y") -
                    q.at("z") * q.at("u") * 2 + q.at("x") * q.at("v") * 2)
                .is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            if ((p["a"] * 3 + p["b"] * 2).is_zero() || (p["a"] + p["b"] * 2).is_zero())
                return false;
            p["x"] = Scalar(0);
            p["y"] = p["z"] * p["u"] * 2 / (p["a"] + p["b"] * 2);
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a");
            bb.br(4, 1, {{q.at("u"), 2}});
            bb.br(5, 1, {{a / 2, 1}, {q.at("v"), 2}});
            bb.br(5, 2, {{-(a / 2), 2}});
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}, {q.at("b"), 3}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("c"), 3}, {a, 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 5, "a! u v z t r s y mu( alpha!");
        add_cond(f, "ay - 2zu = 0", [](const Params& q) {
            return (q.at("a") * q.at("y") - q.at("z") * q.at("u") * 2).is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            p["y"] = p["z"] * p["u"] * 2 / p["a"];
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a");
            bb.br(4, 1, {{q.at("u"), 2}});
            bb.br(5, 1, {{a / 2, 1}, {q.at("v"), 2}});
            bb.br(5, 2, {{-(a / 2), 2}});
            bb.br(3, 4, {{q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {a, 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 4, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    auto gx_brackets = [](Rb& bb, const Params& q) {
        Scalar a = q.at("a"), u = q.at("u"), v = q.at("v"), p2 = q.at("p2");
        bb.br(4, 1, {{u, 1}, {u * p2, 2}});
        bb.br(4, 2, {{-(u / p2), 1}, {-u, 2}});
        bb.br(5, 1, {{v, 1}, {(v * 2 - a) * p2 / 2, 2}});
        bb.br(5, 2, {{-((v * 2 + a) / (p2 * 2)), 1}, {-v, 2}});
    };
    {
        Family f = fam(8, 6, "a! b! c p2! u v z t r s x y alpha!");
        add_cond(f, "((2a+2b+2v)x - 2zu)p - ay + 2tu - 2yv = 0", [](const Params& q) {
            Scalar lhs = ((q.at("a") * 2 + q.at("b") * 2 + q.at("v") * 2) * q.at("x") -
                          q.at("z") * q.at("u") * 2) *
                             q.at("p2") -
                         q.at("a") * q.at("y") + q.at("t") * q.at("u") * 2 -
                         q.at("y") * q.at("v") * 2;
            return lhs.is_zero();
        });
        add_cond(f, "(2xv - ax - 2zu)p + (2a+2b-2v)y + 2tu = 0", [](const Params& q) {
            Scalar lhs = (q.at("x") * q.at("v") * 2 - q.at("a") * q.at("x") -
                          q.at("z") * q.at("u") * 2) *
                             q.at("p2") +
                         (q.at("a") * 2 + q.at("b") * 2 - q.at("v") * 2) * q.at("y") +
                         q.at("t") * q.at("u") * 2;
            return lhs.is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            Scalar a11 = (p["a"] * 2 + p["b"] * 2 + p["v"] * 2) * p["p2"];
            Scalar a12 = -(p["a"] + p["v"] * 2);
            Scalar a21 = (p["v"] * 2 - p["a"]) * p["p2"];
            Scalar a22 = p["a"] * 2 + p["b"] * 2 - p["v"] * 2;
            Scalar rhs = p["z"] * p["u"] * 2 * p["p2"] - p["t"] * p["u"] * 2;
            Scalar d = a11 * a22 - a12 * a21;
            if (d.is_zero()) return false;
            p["x"] = (rhs * a22 - a12 * rhs) / d;
            p["y"] = (a11 * rhs - rhs * a21) / d;
            return true;
        };
        f.build = [gx_brackets](const Params& q) {
            Rb bb(5);
            gx_brackets(bb, q);
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}, {q.at("b"), 3}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("c"), 3}, {q.at("a"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 7, "a! p2! u v z t r s x y mu( alpha!");
        add_cond(f, "((2a+2v)x - 2zu)p - ay + 2tu - 2yv = 0", [](const Params& q) {
            Scalar lhs = ((q.at("a") * 2 + q.at("v") * 2) * q.at("x") -
                          q.at("z") * q.at("u") * 2) *
                             q.at("p2") -
                         q.at("a") * q.at("y") + q.at("t") * q.at("u") * 2 -
                         q.at("y") * q.at("v") * 2;
            return lhs.is_zero();
        });
        add_cond(f, "(2xv - ax - 2zu)p + (2a-2v)y + 2tu = 0", [](const Params& q) {
            Scalar lhs = (q.at("x") * q.at("v") * 2 - q.at("a") * q.at("x") -
                          q.at("z") * q.at("u") * 2) *
                             q.at("p2") +
                         (q.at("a") * 2 - q.at("v") * 2) * q.at("y") + q.at("t") * q.at("u") * 2;
            return lhs.is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            Scalar a11 = (p["a"] * 2 + p["v"] * 2) * p["p2"];
            Scalar a12 = -(p["a"] + p["v"] * 2);
            Scalar a21 = (p["v"] * 2 - p["a"]) * p["p2"];
            Scalar a22 = p["a"] * 2 - p["v"] * 2;
            Scalar rhs = p["z"] * p["u"] * 2 * p["p2"] - p["t"] * p["u"] * 2;
            Scalar d = a11 * a22 - a12 * a21;
            if (d.is_zero()) return false;
            p["x"] = (rhs * a22 - a12 * rhs) / d;
            p["y"] = (a11 * rhs - rhs * a21) / d;
            return true;
        };
        f.build = [gx_brackets](const Params& q) {
            Rb bb(5);
            gx_brackets(bb, q);
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("a"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            bb.mset(3, 4, q.at("mu"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 8, "a b c d u v w x y z t r s alpha!");
        add_cond(f, "(a+d+u)x + yw = 0", [](const Params& q) {
            return ((q.at("a") + q.at("d") + q.at("u")) * q.at("x") + q.at("y") * q.at("w"))
                .is_zero();
        });
        add_cond(f, "xv + (a+d-u)y = 0", [](const Params& q) {
            return (q.at("x") * q.at("v") + (q.at("a") + q.at("d") - q.at("u")) * q.at("y"))
                .is_zero();
        });
        f.finish_sample = [](Params& p, Sampler& s) {
            if (s.range(0, 1) == 0) {
                p["x"] = Scalar(0);
                p["y"] = Scalar(0);
                return true;
            }
            if (p["v"].is_zero()) return false;
            Scalar ad = p["a"] + p["d"];
            p["w"] = (ad * ad - p["u"] * p["u"]) / p["v"];
            if ((ad + p["u"]).is_zero()) return false;
            p["x"] = -(p["y"] * p["w"]) / (ad + p["u"]);
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(5, 1, {{q.at("u"), 1}, {q.at("v"), 2}});
            bb.br(5, 2, {{q.at("w"), 1}, {-q.at("u"), 2}});
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}, {q.at("a"), 3}, {q.at("b"), 4}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("c"), 3}, {q.at("d"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(8, 9, "a! b c u v w x y z t r s alpha!");
        add_cond(f, "(c+u)x - ar + yw = 0", [](const Params& q) {
            return ((q.at("c") + q.at("u")) * q.at("x") - q.at("a") * q.at("r") +
                    q.at("y") * q.at("w"))
                .is_zero();
        });
        add_cond(f, "(c-u)y - as + xv = 0", [](const Params& q) {
            return ((q.at("c") - q.at("u")) * q.at("y") - q.at("a") * q.at("s") +
                    q.at("x") * q.at("v"))
                .is_zero();
        });
        f.finish_sample = [](Params& p, Sampler&) {
            p["r"] = ((p["c"] + p["u"]) * p["x"] + p["y"] * p["w"]) / p["a"];
            p["s"] = ((p["c"] - p["u"]) * p["y"] + p["x"] * p["v"]) / p["a"];
            return true;
        };
        f.build = [](const Params& q) {
            Rb bb(5);
            bb.br(5, 1, {{q.at("u"), 1}, {q.at("v"), 2}});
            bb.br(5, 2, {{q.at("w"), 1}, {-q.at("u"), 2}});
            bb.br(3, 4, {{q.at("x"), 1}, {q.at("y"), 2}, {q.at("a"), 4}});
            bb.br(3, 5, {{q.at("z"), 1}, {q.at("t"), 2}, {q.at("b"), 4}});
            bb.br(4, 5, {{q.at("r"), 1}, {q.at("s"), 2}, {q.at("c"), 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

void add_table_9(std::vector<Family>& out) {
    // The printed rows label their last bracket line [e3,e5] twice; the
    // second line is encoded as [e4,e5], the only reading that makes the
    // rows well-formed.
    {
        Family f = fam(9, 1, "a! x y z p2 q alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a"), x = q.at("x"), y = q.at("y"), p2 = q.at("p2"), qq = q.at("q");
            bb.br(3, 2, {{x, 1}, {-a, 4}});
            bb.br(4, 2, {{y, 1}, {a, 3}});
            bb.br(5, 2, {{q.at("z"), 1}});
            bb.br(3, 5, {{(-(qq * x) + p2 * y) / a, 1}, {p2, 3}, {qq, 4}});
            bb.br(4, 5, {{-((p2 * x + qq * y) / a), 1}, {-qq, 3}, {p2, 4}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(9, 2, "a! z! x y b q alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a"), x = q.at("x"), y = q.at("y"), qq = q.at("q");
            bb.br(3, 2, {{x, 1}, {-a, 4}});
            bb.br(4, 2, {{y, 1}, {a, 3}});
            bb.br(5, 2, {{q.at("z"), 1}});
            bb.br(3, 4, {{q.at("b"), 1}});
            bb.br(3, 5, {{-(qq * x / a), 1}, {qq, 4}});
            bb.br(4, 5, {{-(qq * y / a), 1}, {-qq, 3}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
    {
        Family f = fam(9, 3, "a! x y b c q alpha!");
        f.build = [](const Params& q) {
            Rb bb(5);
            Scalar a = q.at("a"), x = q.at("x"), y = q.at("y"), qq = q.at("q");
            bb.br(3, 2, {{x, 1}, {-a, 4}});
            bb.br(4, 2, {{y, 1}, {a, 3}});
            bb.br(3, 4, {{q.at("b"), 1}, {q.at("c"), 2}});
            bb.br(3, 5, {{-(qq * x / a), 1}, {qq, 4}});
            bb.br(4, 5, {{-(qq * y / a), 1}, {-qq, 3}});
            bb.rset(1, 2, q.at("alpha"));
            return bb.done();
        };
        out.push_back(std::move(f));
    }
}

}  // namespace

std::vector<Family> families() {
    std::vector<Family> out;
    add_tables_1_2(out);
    add_table_3(out);
    add_table_4(out);
    add_table_5(out);
    add_table_6(out);
    add_table_7(out);
    add_table_8(out);
    add_table_9(out);
    return out;
}

const Family* find_family(const std::vector<Family>& all, const std::string& id) {
    for (const auto& f : all)
        if (f.id == id) return &f;
    return nullptr;
}

long Sampler::range(long lo, long hi) {
    return lo + long(rng_() % uint64_t(hi - lo + 1));
}

Scalar Sampler::draw(ParamKind kind) {
    switch (kind) {
        case ParamKind::Free:
            return Scalar::ratio(range(-6, 6), range(1, 3));
        case ParamKind::Nonzero: {
            long num = 0;
            while (num == 0) num = range(-6, 6);
            return Scalar::ratio(num, range(1, 3));
        }
        case ParamKind::Positive:
            return Scalar::ratio(range(1, 6), range(1, 3));
        case ParamKind::UnitOpen: {
            long den = range(2, 7);
            return Scalar::ratio(range(1, den - 1), den);
        }
        case ParamKind::UnitHalf: {
            long den = range(2, 7);
            return Scalar::ratio(range(0, den - 1), den);
        }
        case ParamKind::GreaterOne:
            return Scalar(1) + Scalar::ratio(range(1, 6), range(1, 3));
        case ParamKind::Choice12:
            return Scalar(range(1, 2));
    }
    throw std::logic_error("draw: bad kind");
}

Params sample_params(const Family& f, Sampler& s) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Params p;
        for (const auto& spec : f.params) p.emplace(spec.name, s.draw(spec.kind));
        if (f.finish_sample && !f.finish_sample(p, s)) continue;
        bool ok = true;
        for (const auto& c : f.conditions)
            if (!c.holds(p)) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    throw std::runtime_error("sample_params: no admissible assignment found for " + f.id);
}

AssembledTriple instantiate(const Family& f, const Params& p, bool corrected) {
    for (const auto& spec : f.params)
        if (!p.count(spec.name))
            throw std::invalid_argument("instantiate: missing parameter " + spec.name);
    for (const auto& c : f.conditions)
        if (!c.holds(p))
            throw std::invalid_argument("condition " + c.description + " violated");
    if (corrected) {
        if (!f.corrected_build)
            throw std::invalid_argument("instantiate: " + f.id + " has no corrected variant");
        return f.corrected_build(p);
    }
    return f.build(p);
}

FamilyReport verify_family(const Family& f, int samples, uint64_t seed) {
    FamilyReport rep;
    rep.id = f.id;
    rep.samples = samples;
    rep.partial = f.partial;
    rep.has_correction = bool(f.corrected_build);
    rep.correction_note = f.correction_note;
    Sampler s(seed * 1000003ull + uint64_t(f.table) * 101 + uint64_t(f.row));
    for (int i = 0; i < samples; ++i) {
        Params p = sample_params(f, s);
        auto run = [&](bool corrected) -> std::pair<bool, std::string> {
            AssembledTriple t = instantiate(f, p, corrected);
            if (!jacobi(t.algebra).holds) return {false, "jacobi"};
            RPReport r = is_riemann_poisson(t.algebra, t.r, t.rho);
            if (!r.verdict) {
                std::string cond = r.witness ? r.witness->condition : "unknown";
                return {false, cond};
            }
            if (r.rank != f.declared_rank) return {false, "rank"};
            return {true, ""};
        };
        auto [ok, why] = run(false);
        if (ok)
            ++rep.verbatim_passed;
        else
            rep.failures.push_back({i, why, "verbatim sample failed"});
        if (rep.has_correction) {
            auto [cok, cwhy] = run(true);
            if (cok) ++rep.corrected_passed;
        }
    }
    rep.all_passed = rep.verbatim_passed == samples ||
                     (rep.has_correction && rep.corrected_passed == samples);
    rep.used_correction = rep.all_passed && rep.verbatim_passed < samples;
    return rep;
}

Bivector omega_of_bivector(const Bivector& r) {
    return Bivector(-inverse(r.matrix()));
}

bool verify_der_column(const Family& f, const Params& p) {
    if (f.symplectic_derivations.empty())
        throw std::invalid_argument("verify_der_column: row has no printed basis");
    AssembledTriple t = instantiate(f, p);
    Bivector omega = omega_of_bivector(t.r);
    std::vector<Mat> ders = sp_cap_der(t.algebra, omega);
    int n = t.algebra.dim();
    auto flatten = [n](const std::vector<Mat>& ms) {
        std::vector<Vec> rows;
        for (const auto& m : ms) {
            Vec v(size_t(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) v[size_t(i) * n + j] = m.at(i, j);
            rows.push_back(v);
        }
        return Mat::from_rows(rows, n * n);
    };
    return same_span(flatten(ders), flatten(f.symplectic_derivations));
}

}  // namespace rplie

