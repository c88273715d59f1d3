# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Identity checks run by the oracle command. Every check takes the context,
the parsed arguments and a thread count, and returns a dict with at least
"passed" and "first_difference".
"""

from howefock.combinat.partitions import as_generalized, parse_parts, partitions_of, partitions_up_to
from howefock.oscillator import (
    SuperPolynomial,
    box_lambda,
    certify,
    fock_generators,
    gram_matrix,
    hermitian_form,
    is_diagonal_positive,
    joint_hwv_kernel,
    joint_weight,
    monomials,
    phi,
    sigma,
)
from howefock.oscillator.operators import AlgebraElement
from howefock.representations import (
    branch,
    branch_character,
    char_W,
    fock_character,
    howe_character_sum,
    howe_enumerate,
    tensor_character,
    tensor_decompose,
)
from howefock.symfunc import (
    VariableSet,
    cauchy_dual_lhs,
    cauchy_dual_rhs,
    cauchy_lhs,
    cauchy_rhs,
    hook_condition,
    hook_schur_skew,
    hook_schur_tableau,
    lr_expand,
    schur_product_expansion,
)

__all__ = ["CHECKS", "compare"]


def compare(left, right, **extra):
    diff = left.first_difference(right)
    return {"passed": diff is None, "first_difference": diff, **extra}


def _passed(**extra):
    return {"passed": True, "first_difference": None, **extra}


def check_cauchy(ctx, args, threads):
    return compare(cauchy_lhs(ctx.m, ctx.n, ctx.d, ctx.trunc), cauchy_rhs(ctx.m, ctx.n, ctx.d, ctx.trunc, threads))


def check_cauchy_dual(ctx, args, threads):
    return compare(
        cauchy_dual_lhs(ctx.p, ctx.q, ctx.d, ctx.trunc),
        cauchy_dual_rhs(ctx.p, ctx.q, ctx.d, ctx.trunc, threads),
    )


def check_hookschur(ctx, args, threads):
    """
    skew and tableau expansions of HS_lambda agree for every |lambda| <= N,
    and HS_lambda vanishes exactly when lambda_{m+1} > n
    """
    x, y = VariableSet("x", ctx.m), VariableSet("y", ctx.n)
    checked = 0
    for la in partitions_up_to(ctx.trunc, ctx.trunc, pad=False):
        skew = hook_schur_skew(la, x, y)
        result = compare(skew, hook_schur_tableau(la, x, y))
        checked += 1
        if result["passed"] and skew.is_zero() == hook_condition(la, ctx.m, ctx.n):
            diff = {"monomial": "HS != 0", "left": not skew.is_zero(), "right": hook_condition(la, ctx.m, ctx.n)}
            result = {"passed": False, "first_difference": diff}
        if not result["passed"]:
            return {**result, "lambda": la.to_text(), "checked": checked}
    return _passed(checked=checked)


def check_lr(ctx, args, threads):
    """LR counting against Schur expansion of s_mu s_nu for |mu| + |nu| <= N"""
    checked = 0
    for total in range(ctx.trunc + 1):
        for size in range(total + 1):
            for mu in partitions_of(size, size, pad=False):
                for nu in partitions_of(total - size, total - size, pad=False):
                    left = {la.parts: c for la, c in lr_expand(mu, nu).items()}
                    right = {la.parts: c for la, c in schur_product_expansion(mu, nu).items()}
                    checked += 1
                    if left != right:
                        labels = sorted(set(left) | set(right), reverse=True)
                        first = next(la for la in labels if left.get(la, 0) != right.get(la, 0))
                        diff = {"monomial": f"s_({','.join(map(str, first))})", "left": left.get(first, 0), "right": right.get(first, 0)}
                        return {"passed": False, "first_difference": diff, "mu": mu.to_text(), "nu": nu.to_text(), "checked": checked}
    return _passed(checked=checked)


def check_fock(ctx, args, threads):
    return compare(fock_character(ctx), howe_character_sum(ctx, threads))


def check_howe(ctx, args, threads):
    """
    per degree, the joint highest weight kernel has one vector for every Howe
    label, of weight (lambda, Lambda(lambda)) and proportional to box_lambda
    """
    labels = howe_enumerate(ctx.m, ctx.n, ctx.p, ctx.q, ctx.d, ctx.trunc)
    for degree in range(ctx.trunc + 1):
        kernel = joint_hwv_kernel(ctx, degree)
        expected = [la for la in labels if la.abs_size == degree]
        if len(kernel) != len(expected):
            diff = {"monomial": f"degree {degree}", "left": len(kernel), "right": len(expected)}
            return {"passed": False, "first_difference": diff}
        by_weight = {}
        for vector in kernel:
            by_weight.setdefault(joint_weight(vector), []).append(vector)
        for la in expected:
            report = certify(la, ctx)
            key = (la.parts, tuple(report["Lambda"]))
            found = by_weight.get(key, [])
            if not (report["annihilated_by_all_raising"] and report["matches_Lambda"]):
                diff = {"monomial": f"box_({la.to_text()})", "left": report["super_weight"], "right": report["Lambda"]}
                return {"passed": False, "first_difference": diff}
            if len(found) != 1 or not found[0].proportional_to(box_lambda(la, ctx)):
                diff = {"monomial": f"kernel at ({la.to_text()})", "left": len(found), "right": 1}
                return {"passed": False, "first_difference": diff}
    return _passed(checked=len(labels))


def _all_elements(ctx):
    out = [AlgebraElement.e(i, j) for i in range(1, ctx.d + 1) for j in range(1, ctx.d + 1)]
    out += [AlgebraElement.E(a, b) for a in range(1, ctx.super_rank + 1) for b in range(1, ctx.super_rank + 1)]
    return out


def check_unitarity(ctx, args, threads):
    """
    <phi(X) u, v> = <u, phi(sigma(X)) v> for every basis element X and all
    monomials u, v of degree <= N, and a diagonal positive Gram matrix in every degree
    """
    gens = fock_generators(ctx)
    basis = []
    for degree in range(ctx.trunc + 1):
        layer = [SuperPolynomial.monomial(gens, exp) for exp in monomials(ctx, degree)]
        if not is_diagonal_positive(gram_matrix(layer)):
            diff = {"monomial": f"gram matrix in degree {degree}", "left": "not diagonal positive", "right": "diagonal positive"}
            return {"passed": False, "first_difference": diff}
        basis.extend(layer)

    checked = 0
    for element in _all_elements(ctx):
        sign, adjoint = sigma(element, ctx)
        left_op, right_op = phi(element, ctx), phi(adjoint, ctx)
        images = [left_op.apply(u) for u in basis]
        adjoint_images = [right_op.apply(v) * sign for v in basis]
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                checked += 1
                left = hermitian_form(images[i], v)
                right = hermitian_form(u, adjoint_images[j])
                if left != right:
                    diff = {"monomial": f"{element.to_text()}: <{u.to_text()}|{v.to_text()}>", "left": str(left), "right": str(right)}
                    return {"passed": False, "first_difference": diff}
    return _passed(checked=checked)


def check_branch(ctx, args, threads):
    """branching tables reproduce char_W for every admissible lambda with sum |lambda_i| <= N"""
    checked = 0
    for la in howe_enumerate(ctx.m, ctx.n, ctx.p, ctx.q, ctx.d, ctx.trunc):
        result = compare(branch_character(branch(la, ctx, ctx.trunc), ctx), char_W(la, ctx, threads))
        checked += 1
        if not result["passed"]:
            return {**result, "lambda": la.to_text(), "checked": checked}
    return _passed(checked=checked)


def _shape(value):
    if isinstance(value, (list, tuple)):
        return as_generalized(tuple(int(v) for v in value))
    return parse_parts(str(value))


def check_tensor(ctx, args, threads):
    """ch W(mu) ch W(nu) against the characters of the tensor product table"""
    mu, nu = _shape(args.mu), _shape(args.nu)
    left = char_W(mu, ctx.with_d(mu.length), threads) * char_W(nu, ctx.with_d(nu.length), threads)
    table = tensor_decompose(mu, nu, ctx, d_max=ctx.trunc, threads=threads)
    right = tensor_character(table, ctx, mu.length + nu.length)
    return compare(left, right, constituents=len(table))


CHECKS = {
    "cauchy": check_cauchy,
    "cauchy_dual": check_cauchy_dual,
    "hookschur": check_hookschur,
    "lr": check_lr,
    "fock": check_fock,
    "howe": check_howe,
    "unitarity": check_unitarity,
    "branch": check_branch,
    "tensor": check_tensor,
}
