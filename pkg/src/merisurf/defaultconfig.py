log_level = 'INFO'

# classifier tolerances
tol_kappa = 1e-6
tol_alpha = 1e-6
tol_ode = 1e-7
residual_threshold = 1e-4
indeterminate_band = 10.0

# relative step for the numeric H_u
hu_step = 1e-6

grid = {'nu': 41, 'nv': 41}
engine = {'executers': 1}
