from goldbach_toolkit.sieve.primes import PrimeTable, sieve_primes, prime_count, pi_approx
from goldbach_toolkit.sieve.cache import PrimeCache, cached_sieve

__all__ = ["PrimeTable", "sieve_primes", "prime_count", "pi_approx", "PrimeCache", "cached_sieve"]
