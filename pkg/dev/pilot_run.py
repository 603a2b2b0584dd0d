from dotenv import load_dotenv

import sys
sys.path.append('..')

load_dotenv()

from primesmooth.logging import setup_logging
from primesmooth.verify import (
    crossover_violations, freeze_constants, pilot_config, run_sweep, save_constants, write_report)

setup_logging(log_file='pilot.log', stdout_log_level='INFO')

# Pilot sweep over the acceptance primes; its maximum ratios become the frozen constants
config = pilot_config(workers=4)
records = run_sweep(config)
write_report(records, 'pilot.csv')

constants = freeze_constants(records)
save_constants(constants, 'constants.json')
for theorem, c_star in constants.items():
    print(f"{theorem}: C* = {c_star:.6g}")
print(f"crossover violations: {len(crossover_violations(records))}")
