#pragma once

#include <string>
#include <vector>

#include "qeven/oracle.hpp"

namespace qeven {

/*
 * The identity catalogue: every displayed relation between x, y, z, the
 * nu elements and the squares, as pairs of free-algebra elements for the
 * oracle to compare.  Identities stated with denominators are recorded in
 * cleared form (both sides multiplied by q - q^-1 or q^2 - q^-2), keeping
 * all arithmetic in the Laurent ring.
 */
struct Identity {
    std::string id;
    NCPoly lhs;
    NCPoly rhs;

    std::string statement() const { return lhs.str() + " = " + rhs.str(); }
    bool holds() const { return check_identity(lhs, rhs); }
};

namespace detail {

inline NCPoly uw(std::initializer_list<Gen> gens) {
    return NCPoly::from_word(Word(Alphabet::U, std::vector<Gen>(gens)));
}

inline NCPoly aw(std::initializer_list<Gen> gens) {
    return NCPoly::from_word(Word(Alphabet::A, std::vector<Gen>(gens)));
}

inline Laurent lq(int k) { return Laurent::q_power(k); }

} // namespace detail

// The single-letter / nu commutations in degree-consistent form, plus all
// other relations the oracle verifies.  Order matches the catalogue ids.
inline const std::vector<Identity>& oracle_identity_catalogue() {
    using detail::lq;
    using detail::uw;
    using G = Gen;
    static const std::vector<Identity> catalogue = [] {
        const NCPoly one = NCPoly::unit(Alphabet::U);
        const NCPoly X = uw({G::X}), Y = uw({G::Y}), Z = uw({G::Z});
        const NCPoly X2 = uw({G::X, G::X}), Y2 = uw({G::Y, G::Y}), Z2 = uw({G::Z, G::Z});
        const NCPoly NUX = expand(G::NX), NUY = expand(G::NY), NUZ = expand(G::NZ);
        const Laurent q = lq(1), qi = lq(-1);
        const Laurent qmqi = lq(1) - lq(-1);            // q - q^-1
        const Laurent q2mq2i = lq(2) - lq(-2);          // q^2 - q^-2
        const Laurent qpqi = lq(1) + lq(-1);            // q + q^-1
        const Laurent cubic_rhs = q2mq2i * qmqi;        // (q^2 - q^-2)(q - q^-1)

        std::vector<Identity> out;
        auto add = [&out](std::string id, NCPoly lhs, NCPoly rhs) {
            out.push_back(Identity{std::move(id), std::move(lhs), std::move(rhs)});
        };

        // reformulated defining relations
        add("flip.xy", X * Y, lq(-2) * (Y * X) + (Laurent(1) - lq(-2)) * one);
        add("flip.yx", Y * X, lq(2) * (X * Y) + (Laurent(1) - lq(2)) * one);
        add("flip.yz", Y * Z, lq(-2) * (Z * Y) + (Laurent(1) - lq(-2)) * one);
        add("flip.zy", Z * Y, lq(2) * (Y * Z) + (Laurent(1) - lq(2)) * one);
        add("flip.zx", Z * X, lq(-2) * (X * Z) + (Laurent(1) - lq(-2)) * one);
        add("flip.xz", X * Z, lq(2) * (Z * X) + (Laurent(1) - lq(2)) * one);

        // equitable relations, cleared of q - q^-1
        add("equitable.xy", q * (X * Y) - qi * (Y * X), qmqi * one);
        add("equitable.yz", q * (Y * Z) - qi * (Z * Y), qmqi * one);
        add("equitable.zx", q * (Z * X) - qi * (X * Z), qmqi * one);

        // the two expressions for each nu element agree
        add("nu-def.x", q * (one - Y * Z), qi * (one - Z * Y));
        add("nu-def.y", q * (one - Z * X), qi * (one - X * Z));
        add("nu-def.z", q * (one - X * Y), qi * (one - Y * X));

        // two-letter products against nu
        add("pairs.xy", X * Y, one - qi * NUZ);
        add("pairs.yx", Y * X, one - q * NUZ);
        add("pairs.yz", Y * Z, one - qi * NUX);
        add("pairs.zy", Z * Y, one - q * NUX);
        add("pairs.zx", Z * X, one - qi * NUY);
        add("pairs.xz", X * Z, one - q * NUY);

        // single letter past nu (degree-consistent readings)
        add("nu-comm.x-nuy", X * NUY, lq(2) * (NUY * X));
        add("nu-comm.x-nuz", X * NUZ, lq(-2) * (NUZ * X));
        add("nu-comm.y-nuz", Y * NUZ, lq(2) * (NUZ * Y));
        add("nu-comm.y-nux", Y * NUX, lq(-2) * (NUX * Y));
        add("nu-comm.z-nux", Z * NUX, lq(2) * (NUX * Z));
        add("nu-comm.z-nuy", Z * NUY, lq(-2) * (NUY * Z));

        // squares past nu
        add("sq-comm.x2-nuy", X2 * NUY, lq(4) * (NUY * X2));
        add("sq-comm.x2-nuz", X2 * NUZ, lq(-4) * (NUZ * X2));
        add("sq-comm.y2-nuz", Y2 * NUZ, lq(4) * (NUZ * Y2));
        add("sq-comm.y2-nux", Y2 * NUX, lq(-4) * (NUX * Y2));
        add("sq-comm.z2-nux", Z2 * NUX, lq(4) * (NUX * Z2));
        add("sq-comm.z2-nuy", Z2 * NUY, lq(-4) * (NUY * Z2));

        // products of squares
        add("sq-pair.x2y2", X2 * Y2, one - (lq(-2) * qpqi) * NUZ + lq(-4) * (NUZ * NUZ));
        add("sq-pair.y2z2", Y2 * Z2, one - (lq(-2) * qpqi) * NUX + lq(-4) * (NUX * NUX));
        add("sq-pair.z2x2", Z2 * X2, one - (lq(-2) * qpqi) * NUY + lq(-4) * (NUY * NUY));
        add("sq-pair.y2x2", Y2 * X2, one - (lq(2) * qpqi) * NUZ + lq(4) * (NUZ * NUZ));
        add("sq-pair.z2y2", Z2 * Y2, one - (lq(2) * qpqi) * NUX + lq(4) * (NUX * NUX));
        add("sq-pair.x2z2", X2 * Z2, one - (lq(2) * qpqi) * NUY + lq(4) * (NUY * NUY));

        // squares against the matching nu
        add("sq-nu.x2-nux",
            X2 * NUX, qi * X2 - qi * one + lq(2) * NUY + lq(-2) * NUZ - q * (NUY * NUZ));
        add("sq-nu.y2-nuy",
            Y2 * NUY, qi * Y2 - qi * one + lq(2) * NUZ + lq(-2) * NUX - q * (NUZ * NUX));
        add("sq-nu.z2-nuz",
            Z2 * NUZ, qi * Z2 - qi * one + lq(2) * NUX + lq(-2) * NUY - q * (NUX * NUY));
        add("sq-nu.nux-x2",
            NUX * X2, qi * X2 - qi * one + lq(-2) * NUY + lq(2) * NUZ - q * (NUY * NUZ));
        add("sq-nu.nuy-y2",
            NUY * Y2, qi * Y2 - qi * one + lq(-2) * NUZ + lq(2) * NUX - q * (NUZ * NUX));
        add("sq-nu.nuz-z2",
            NUZ * Z2, qi * Z2 - qi * one + lq(-2) * NUX + lq(2) * NUY - q * (NUX * NUY));

        // squares expressed through nu, cleared of q - q^-1
        add("sq-from-nu.x2", qmqi * X2, qmqi * one - (q * (NUY * NUZ) - qi * (NUZ * NUY)));
        add("sq-from-nu.y2", qmqi * Y2, qmqi * one - (q * (NUZ * NUX) - qi * (NUX * NUZ)));
        add("sq-from-nu.z2", qmqi * Z2, qmqi * one - (q * (NUX * NUY) - qi * (NUY * NUX)));

        // nu expressed through squares, cleared of q^2 - q^-2
        add("nu-from-sq.x", (q2mq2i * qpqi) * NUX,
            (q2mq2i * (lq(2) + lq(-2))) * one - (lq(4) * (Y2 * Z2) - lq(-4) * (Z2 * Y2)));
        add("nu-from-sq.y", (q2mq2i * qpqi) * NUY,
            (q2mq2i * (lq(2) + lq(-2))) * one - (lq(4) * (Z2 * X2) - lq(-4) * (X2 * Z2)));
        add("nu-from-sq.z", (q2mq2i * qpqi) * NUZ,
            (q2mq2i * (lq(2) + lq(-2))) * one - (lq(4) * (X2 * Y2) - lq(-4) * (Y2 * X2)));

        // degree-3 nu relations
        add("cubic.xxy",
            lq(3) * (NUX * NUX * NUY) - qpqi * (NUX * NUY * NUX) + lq(-3) * (NUY * NUX * NUX),
            cubic_rhs * NUX);
        add("cubic.yyz",
            lq(3) * (NUY * NUY * NUZ) - qpqi * (NUY * NUZ * NUY) + lq(-3) * (NUZ * NUY * NUY),
            cubic_rhs * NUY);
        add("cubic.zzx",
            lq(3) * (NUZ * NUZ * NUX) - qpqi * (NUZ * NUX * NUZ) + lq(-3) * (NUX * NUZ * NUZ),
            cubic_rhs * NUZ);
        add("cubic.yyx",
            lq(-3) * (NUY * NUY * NUX) - qpqi * (NUY * NUX * NUY) + lq(3) * (NUX * NUY * NUY),
            cubic_rhs * NUY);
        add("cubic.zzy",
            lq(-3) * (NUZ * NUZ * NUY) - qpqi * (NUZ * NUY * NUZ) + lq(3) * (NUY * NUZ * NUZ),
            cubic_rhs * NUZ);
        add("cubic.xxz",
            lq(-3) * (NUX * NUX * NUZ) - qpqi * (NUX * NUZ * NUX) + lq(3) * (NUZ * NUX * NUX),
            cubic_rhs * NUX);

        // mixed degree-3 relations, cleared of q - q^-1
        const NCPoly comm_yz = q * (NUY * NUZ) - qi * (NUZ * NUY);
        const NCPoly comm_zx = q * (NUZ * NUX) - qi * (NUX * NUZ);
        const NCPoly comm_xy = q * (NUX * NUY) - qi * (NUY * NUX);
        const NCPoly comm2_yz = lq(2) * (NUY * NUZ) - lq(-2) * (NUZ * NUY);
        const NCPoly comm2_zx = lq(2) * (NUZ * NUX) - lq(-2) * (NUX * NUZ);
        const NCPoly comm2_xy = lq(2) * (NUX * NUY) - lq(-2) * (NUY * NUX);
        add("mixed-cubic.x-left", NUX * comm_yz,
            qmqi * (NUX - lq(-2) * NUY - lq(2) * NUZ) + comm2_yz);
        add("mixed-cubic.y-left", NUY * comm_zx,
            qmqi * (NUY - lq(-2) * NUZ - lq(2) * NUX) + comm2_zx);
        add("mixed-cubic.z-left", NUZ * comm_xy,
            qmqi * (NUZ - lq(-2) * NUX - lq(2) * NUY) + comm2_xy);
        add("mixed-cubic.x-right", comm_yz * NUX,
            qmqi * (NUX - lq(2) * NUY - lq(-2) * NUZ) + comm2_yz);
        add("mixed-cubic.y-right", comm_zx * NUY,
            qmqi * (NUY - lq(2) * NUZ - lq(-2) * NUX) + comm2_zx);
        add("mixed-cubic.z-right", comm_xy * NUZ,
            qmqi * (NUZ - lq(2) * NUX - lq(-2) * NUY) + comm2_xy);

        return out;
    }();
    return catalogue;
}

// The degree-mixed variant of the nu commutation: x^2 nu_z = q^-2 nu_z x.
// The oracle refutes it; the consistent reading is nu-comm.x-nuz.  Kept
// for the flagged entry in the verify report.
inline const Identity& literal_degree_mixed_identity() {
    using detail::lq;
    using detail::uw;
    static const Identity literal{
        "nu-comm.literal-x2-nuz",
        uw({Gen::X, Gen::X}) * expand(Gen::NZ),
        lq(-2) * (expand(Gen::NZ) * uw({Gen::X})),
    };
    return literal;
}

// Equitable relations in cleared form, for checking U-alphabet module
// actions.
inline const std::vector<Identity>& u_equitable_relations() {
    using detail::lq;
    using detail::uw;
    using G = Gen;
    static const std::vector<Identity> rels = [] {
        const NCPoly one = NCPoly::unit(Alphabet::U);
        const Laurent qmqi = lq(1) - lq(-1);
        std::vector<Identity> out;
        out.push_back({"equitable.xy", lq(1) * uw({G::X, G::Y}) - lq(-1) * uw({G::Y, G::X}),
                       qmqi * one});
        out.push_back({"equitable.yz", lq(1) * uw({G::Y, G::Z}) - lq(-1) * uw({G::Z, G::Y}),
                       qmqi * one});
        out.push_back({"equitable.zx", lq(1) * uw({G::Z, G::X}) - lq(-1) * uw({G::X, G::Z}),
                       qmqi * one});
        return out;
    }();
    return rels;
}

// The twelve defining relations of the presented algebra, cleared of
// denominators, over the A alphabet.
inline const std::vector<Identity>& a_defining_relations() {
    using detail::aw;
    using detail::lq;
    using G = Gen;
    static const std::vector<Identity> rels = [] {
        const NCPoly NX = aw({G::NX}), NY = aw({G::NY}), NZ = aw({G::NZ});
        const Laurent qmqi = lq(1) - lq(-1);
        const Laurent qpqi = lq(1) + lq(-1);
        const Laurent cubic_rhs = (lq(2) - lq(-2)) * qmqi;
        std::vector<Identity> out;
        auto add = [&out](std::string id, NCPoly lhs, NCPoly rhs) {
            out.push_back(Identity{std::move(id), std::move(lhs), std::move(rhs)});
        };
        add("defrel.xxy",
            lq(3) * (NX * NX * NY) - qpqi * (NX * NY * NX) + lq(-3) * (NY * NX * NX),
            cubic_rhs * NX);
        add("defrel.yyz",
            lq(3) * (NY * NY * NZ) - qpqi * (NY * NZ * NY) + lq(-3) * (NZ * NY * NY),
            cubic_rhs * NY);
        add("defrel.zzx",
            lq(3) * (NZ * NZ * NX) - qpqi * (NZ * NX * NZ) + lq(-3) * (NX * NZ * NZ),
            cubic_rhs * NZ);
        add("defrel.yyx",
            lq(-3) * (NY * NY * NX) - qpqi * (NY * NX * NY) + lq(3) * (NX * NY * NY),
            cubic_rhs * NY);
        add("defrel.zzy",
            lq(-3) * (NZ * NZ * NY) - qpqi * (NZ * NY * NZ) + lq(3) * (NY * NZ * NZ),
            cubic_rhs * NZ);
        add("defrel.xxz",
            lq(-3) * (NX * NX * NZ) - qpqi * (NX * NZ * NX) + lq(3) * (NZ * NX * NX),
            cubic_rhs * NX);

        const NCPoly comm_yz = lq(1) * (NY * NZ) - lq(-1) * (NZ * NY);
        const NCPoly comm_zx = lq(1) * (NZ * NX) - lq(-1) * (NX * NZ);
        const NCPoly comm_xy = lq(1) * (NX * NY) - lq(-1) * (NY * NX);
        const NCPoly comm2_yz = lq(2) * (NY * NZ) - lq(-2) * (NZ * NY);
        const NCPoly comm2_zx = lq(2) * (NZ * NX) - lq(-2) * (NX * NZ);
        const NCPoly comm2_xy = lq(2) * (NX * NY) - lq(-2) * (NY * NX);
        add("defrel.x-left", NX * comm_yz, qmqi * (NX - lq(-2) * NY - lq(2) * NZ) + comm2_yz);
        add("defrel.y-left", NY * comm_zx, qmqi * (NY - lq(-2) * NZ - lq(2) * NX) + comm2_zx);
        add("defrel.z-left", NZ * comm_xy, qmqi * (NZ - lq(-2) * NX - lq(2) * NY) + comm2_xy);
        add("defrel.x-right", comm_yz * NX, qmqi * (NX - lq(2) * NY - lq(-2) * NZ) + comm2_yz);
        add("defrel.y-right", comm_zx * NY, qmqi * (NY - lq(2) * NZ - lq(-2) * NX) + comm2_zx);
        add("defrel.z-right", comm_xy * NZ, qmqi * (NZ - lq(2) * NX - lq(-2) * NY) + comm2_xy);
        return out;
    }();
    return rels;
}

// x^2, y^2, z^2 as elements of the presented algebra (cleared form); a
// six-generator action must satisfy these alongside the twelve relations.
inline const std::vector<Identity>& a_square_definitions() {
    using detail::aw;
    using detail::lq;
    using G = Gen;
    static const std::vector<Identity> rels = [] {
        const NCPoly one = NCPoly::unit(Alphabet::A);
        const NCPoly NX = aw({G::NX}), NY = aw({G::NY}), NZ = aw({G::NZ});
        const NCPoly X2 = aw({G::X2}), Y2 = aw({G::Y2}), Z2 = aw({G::Z2});
        const Laurent qmqi = lq(1) - lq(-1);
        std::vector<Identity> out;
        out.push_back({"square-def.x2", qmqi * (one - X2),
                       lq(1) * (NY * NZ) - lq(-1) * (NZ * NY)});
        out.push_back({"square-def.y2", qmqi * (one - Y2),
                       lq(1) * (NZ * NX) - lq(-1) * (NX * NZ)});
        out.push_back({"square-def.z2", qmqi * (one - Z2),
                       lq(1) * (NX * NY) - lq(-1) * (NY * NX)});
        return out;
    }();
    return rels;
}

} // namespace qeven
