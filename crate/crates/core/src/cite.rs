//! Citation strings used in verdict traces. Each is a self-contained
//! statement of the result relied on, attributed to its source.

pub const FINITE_GROUP: &str =
    "Presentability by a product is only defined for infinite groups.";
pub const FINITE_INDEX: &str =
    "Presentability by a product is invariant under passing to finite-index subgroups and to finite-index overgroups.";
pub const INFINITE_CENTRE: &str =
    "A group with infinite centre C is presentable by a product: C x G -> G, (c, g) -> cg, has infinite commuting images and is onto.";
pub const DIRECT_PRODUCT: &str =
    "A direct product of two infinite groups is presentable by a product via the identity map.";

pub const TITS_CRITERION: &str =
    "Tits form criterion (Bourbaki): W is finite iff B is positive definite; an irreducible W is affine iff B is positive semidefinite and degenerate, and then its radical is one-dimensional.";
pub const COXETER_AFFINE: &str =
    "An irreducible affine Coxeter group on l generators is virtually Z^(l-1), which has infinite centre; hence it is presentable by a product.";
pub const COXETER_INDEFINITE: &str =
    "An irreducible Coxeter group that is neither finite nor affine is not presentable by a product (its Tits form has q >= 1 and the group is Zariski dense in the orthogonal group of the form).";

pub const BS_ISO_Z2: &str = "BS(1,1) is isomorphic to Z^2, which has infinite centre.";
pub const BS_KLEIN: &str =
    "BS(1,-1) is the fundamental group of the Klein bottle; its index-2 subgroup Z^2 has infinite centre.";
pub const BS_EQUAL: &str =
    "For |m| = |n| >= 2, the kernel of BS(m,n) -> C_|m| x C_2 has index 2|m| and is isomorphic to Z x F_(2|m|-1), with Z generated by s^m.";
pub const BS_CRITERION: &str =
    "BS(m,n) is presentable by a product if and only if |m| = |n|.";
pub const BS_SOLUBLE: &str =
    "For |m| = 1 < |n|, BS(1,n) embeds as a Zariski-dense subgroup of the affine group of the line (s -> x+1, t -> nx), whose Lie algebra af has no pair of commuting ideals spanning it; so BS(1,n) is not presentable by a product.";
pub const BS_MOLDAVANSKII: &str =
    "For |m|, |n| >= 2 with |m| != |n|: a normal infinite cyclic subgroup of a finite-index subgroup of BS(m,n) forces |m| = |n| (Moldavanskii).";
pub const BS_POWERS: &str =
    "For 1 < |m| < |n|, BS(m,n) is a Powers group (de la Harpe-Preaux), and Powers groups are not presentable by products.";

pub const FREE_PRODUCT_DIHEDRAL: &str =
    "A free product A * B of nontrivial groups is presentable by a product iff A and B both have order two (then it is the infinite dihedral group, virtually Z).";
pub const FREE_PRODUCT_NOT: &str =
    "A free product A * B with A, B nontrivial and not both of order two is not presentable by a product.";
pub const HYPERBOLIC: &str =
    "A non-elementary hyperbolic group is not presentable by a product.";
pub const ELEMENTARY_HYPERBOLIC: &str =
    "An infinite elementary hyperbolic group is virtually Z, hence presentable by a product.";
pub const SIMPLE: &str = "An infinite simple group is not presentable by a product.";
pub const SCHREIER_ONE_ENDED: &str =
    "A finitely generated one-ended group with the Schreier property (every finitely generated normal subgroup is finite or of finite index) is not presentable by a product of finitely generated groups.";
pub const ENDS_TWO: &str = "A two-ended group is virtually Z, hence presentable by a product.";
pub const ENDS_INFINITE: &str =
    "A finitely generated group with infinitely many ends is not presentable by a product.";
pub const VCD_TWO: &str =
    "An infinite finitely presented group of virtual cohomological dimension at most two is presentable by a product iff it is virtually Z or virtually F_k x F_l with k, l >= 1 (Bieri).";
pub const DEFICIENCY: &str =
    "A finitely presented infinite group of deficiency >= 1 that is presentable by a product is infinite cyclic or virtually F_k x Z (Hillman; Reidemeister-Schreier count (a-1)d+1 for index d).";
pub const DEFICIENCY_L2: &str =
    "Deficiency at least two forces a positive first l2-Betti number by the inequality DEF <= 1 + b1(2), and a group with positive first l2-Betti number is not presentable by a product.";
pub const KUNNETH: &str =
    "For k, l >= 2 the product F_k x F_l has b1 = k + l and b2 = kl, so any finite-index subgroup has deficiency at most k + l - kl <= 0.";
pub const SEIFERT: &str =
    "An infinite finitely presented fundamental group of a 3-manifold is presentable by a product iff it has a finite-index subgroup with infinite centre, iff it is the fundamental group of a compact Seifert fibre space.";
pub const L2_BETTI: &str =
    "A group with positive first l2-Betti number is not presentable by a product.";
pub const VIRTUALLY_PRODUCT: &str =
    "A group that is virtually a product of two infinite groups is presentable by a product.";
pub const VIRTUALLY_FREE: &str =
    "A virtually free group of rank >= 2 is non-elementary hyperbolic, hence not presentable by a product.";

pub const LIE_CENTRE: &str =
    "A Lie algebra with nonzero centre z is presentable by a product: z and g commute and z + g = g.";
pub const LIE_IDEAL_PAIR: &str =
    "g is presentable by a product iff some nonzero ideal a has nonzero centralizer z(a) with a + z(a) = g.";
pub const LIE_NO_PAIR: &str =
    "Every nonzero ideal a of g satisfies z(a) = 0 or a + z(a) != g, so no two commuting nonzero subalgebras span g.";
pub const LIE_CENTROID: &str =
    "For a centreless g, commuting nonzero subalgebras spanning g are complementary ideals, which correspond to nontrivial idempotents of the centroid; a local centroid therefore rules them out.";
