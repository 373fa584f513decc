import os

from dotenv import load_dotenv

# Values from a local .env file win over the defaults below
load_dotenv()

# Sampling defaults for char-seq and the identity suite
DEFAULT_SEED = int(os.getenv('LEIBNIZ_SEED', '0'))
DEFAULT_SAMPLES = int(os.getenv('LEIBNIZ_SAMPLES', '50'))
DEFAULT_TRIALS = int(os.getenv('LEIBNIZ_TRIALS', '100'))

# Random rationals are drawn as p/q with |p| <= bound and 1 <= q <= bound
RANDOM_COEFF_BOUND = int(os.getenv('LEIBNIZ_COEFF_BOUND', '5'))

# Logging
LOG_LEVEL = os.getenv('LEIBNIZ_LOG_LEVEL', 'WARNING')
LOG_FILE = os.getenv('LEIBNIZ_LOG_FILE')  # unset means stderr only
LOG_FORMAT = '%(asctime)s [%(levelname)s] %(message)s'

# Batch certification
OUTPUT_DIR = os.getenv('LEIBNIZ_OUTPUT_DIR', 'output')
BATCH_CONFIG = os.getenv('LEIBNIZ_BATCH_CONFIG', 'families.json')

# Labels of the Levi factor, in table order
SL2_LABELS = ('e', 'f', 'h')
