DEFAULT_N = 48
MIN_N = 8
BOX_EFOLDINGS = 12.0
BOX_REFINE_FACTOR = 1.25

P_MIN = 2.0
P_MAX = 3.0
P_SUPERCRITICAL = 8.0 / 3.0
P_RADIAL_MAX = 6.0
P_MASS_CRITICAL_NLS = 10.0 / 3.0
SOBOLEV_S_MAX = 4.0

TOL_INNER = 1e-9
TOL_OUTER = 1e-7
TOL_SCF = 1e-8
EL_RESIDUAL_TARGET = 1e-6
POHOZAEV_TARGET = 1e-4
MAX_INNER_ITERS = 200
MAX_OUTER_ITERS = 2000
MAX_SCF_ITERS = 500
MAX_FLOW_ITERS = 5000
TOL_FLOW = 1e-9
UNIT_MASS_TOL = 1e-10
POSITIVE_SUBSPACE_TOL = 1e-10

ARMIJO = 1e-4
SHRINK = 0.5
MIN_STEP = 1e-12
MAX_STEP = 4.0
PRECONDITIONER_MIN_SHIFT = 1e-2

SCF_GAP_MARGIN = 0.05
SCF_DAMPING = 0.5

RADIAL_R_MAX = 40.0
RADIAL_POINTS = 4001
SHOOT_BRACKET = (1.0, 10.0)
SHOOT_WIDTH = 1e-12
RADIAL_RTOL = 1e-11
RADIAL_ATOL = 1e-13

DECAY_WINDOW = (0.3, 0.8)
DECAY_MIN_EFOLDINGS = 4.0
DECAY_BINS = 64
DEGENERATE_FIT_MASS = 0.5

DEFAULT_C_LIST = (8.0, 16.0, 32.0, 64.0)
DEFAULT_P = 2.5
DEFAULT_M = 1.0
DEFAULT_TAU = 1.0
G_NORM_ORDERS = (0.0, 1.0, 1.5, 2.0)
MIN_FIT_POINTS = 3

FIELD_MAGIC = b'NDGS'
FIELD_VERSION = 1
CSV_PRECISION = 17
REPORT_SCHEMA = 'ndgs-report/1'

LOG_EVERY = 25

PAGE_SIZE_DEFAULT = 20

VALUE_ROUNDOFF = 1e-12

ALGEBRA_N = 32
ALGEBRA_SAMPLES = 20
ALGEBRA_TOL = 1e-10
GRADIENT_N = 16
GRADIENT_SAMPLES = 20
GRADIENT_STEP = 1e-4
GRADIENT_TOL = 1e-5
VARIATIONAL_SAMPLES = 10
RESTART_TOL = 1e-6
DUALITY_TOL = 1e-6
CROSS_SOLVER_TOL = 1e-4
CROSS_OMEGA_TOL = 1e-5
H_MASS_TOL = 1e-3
NSE_RESIDUAL_TOL = 1e-6
FLOW_MASS_TOL = 1e-2
G_L2_SLOPE = (-1.3, -0.7)
NEG_L2_SLOPE = (-2.4, -1.6)
G_H15_SLOPE = (-0.8, -0.2)
DECAY_RATIO_SLOPE = (-1.3, -0.7)
GAP_NU_TOL = 0.10
ORBIT_DIST_MAX = 0.05
H2_RATIO_MAX = 2.0
DECAY_DELTA_SLACK = 1.05

RATE_THEORY = {
    'g_norm_s0': -1.0,
    'g_norm_s1': -1.0,
    'g_norm_s1_5': -0.5,
    'g_norm_s2': 0.0,
    'neg_l2': -2.0,
    'neg_grad_l2': None,
    'decay_ratio_minus': -1.0,
    'orbit_dist': None,
    'energy_defect': -1.0,
    'closure_residual': -3.0,
}

STATUS_MAX_LENGTH = 16
KIND_MAX_LENGTH = 16
PATH_MAX_LENGTH = 512
