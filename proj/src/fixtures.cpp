#include "gendo/fixtures.hpp"

namespace gendo {

QuiverPresentation penny_farthing_quiver(const Field& f)
{
    QuiverPresentation q;
    q.field = f;
    q.name = "penny-farthing";
    q.vertices = {"1", "2"};
    q.arrows = {{0, 0, "a"}, {0, 1, "b1"}, {1, 0, "b2"}};
    q.relations = {
        {{1, {0, 0}}, {f.neg(1), {1, 2}}},
        {{1, {2, 1}}},
    };
    return q;
}

AlgebraPtr penny_farthing(const Field& f) { return validate(from_quiver(penny_farthing_quiver(f))); }

AlgebraPtr commutative_local(const Field& f)
{
    QuiverPresentation q;
    q.field = f;
    q.name = "k[x,y]/(x^2,y^2,xy-yx)";
    q.vertices = {"0"};
    q.arrows = {{0, 0, "x"}, {0, 0, "y"}};
    q.relations = {
        {{1, {0, 0}}},
        {{1, {1, 1}}},
        {{1, {0, 1}}, {f.neg(1), {1, 0}}},
    };
    return validate(from_quiver(q));
}

AlgebraPtr a2_line(const Field& f)
{
    QuiverPresentation q;
    q.field = f;
    q.name = "a2-line";
    q.vertices = {"1", "2"};
    q.arrows = {{0, 1, "a"}};
    return validate(from_quiver(q));
}

AlgebraPtr dual_numbers(const Field& f)
{
    AlgebraPresentation p;
    p.field = f;
    p.name = "k[x]/(x^2)";
    p.basis_labels = {"1", "x"};
    p.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    p.unit = {1, 0};
    p.idempotents = {{1, 0}};
    p.radical_generators = {{0, 1}};
    return validate(std::move(p));
}

AlgebraPtr ground_field(const Field& f)
{
    AlgebraPresentation p;
    p.field = f;
    p.name = "k";
    p.basis_labels = {"1"};
    p.mult = {{{1}}};
    p.unit = {1};
    p.idempotents = {{1}};
    return validate(std::move(p));
}

}  // namespace gendo
