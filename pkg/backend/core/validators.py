import math

from django.core.exceptions import ValidationError

from core.constants import MIN_N, P_MAX, P_MIN, SOBOLEV_S_MAX


def validate_positive(value, name):
    if not math.isfinite(value) or value <= 0:
        raise ValidationError(f'{name} must be positive, got {value!r}.')


def validate_exponent(p, upper=P_MAX):
    if not P_MIN < p < upper:
        raise ValidationError(
            f'Exponent p must lie in ({P_MIN}, {upper}), got {p!r}.'
        )


def validate_tau(tau):
    if not 0 < tau <= 1:
        raise ValidationError(f'tau must lie in (0, 1], got {tau!r}.')


def validate_points(n):
    if int(n) != n or n < MIN_N:
        raise ValidationError(
            f'Points per axis must be an integer >= {MIN_N}, got {n!r}.'
        )
    if n % 2:
        raise ValidationError(f'Points per axis must be even, got {n!r}.')


def validate_sobolev_order(s):
    if not 0 <= s <= SOBOLEV_S_MAX:
        raise ValidationError(
            f'Sobolev order must lie in [0, {SOBOLEV_S_MAX}], got {s!r}.'
        )


def validate_c_list(c_list, min_len=3):
    if len(c_list) < min_len:
        raise ValidationError(
            f'At least {min_len} values of c are required.'
        )
    for c in c_list:
        validate_positive(c, 'c')
    if any(b <= a for a, b in zip(c_list, c_list[1:])):
        raise ValidationError('Values of c must be strictly increasing.')
