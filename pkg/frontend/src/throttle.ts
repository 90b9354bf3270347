/** Collapses a stream of values into at-most-one in-flight delivery.
 *
 * push() while idle delivers immediately; push() while a delivery is in
 * flight overwrites the single pending slot, so when the flight lands only
 * the newest value goes out.  Deliveries happen strictly one at a time and
 * in push order, which is what keeps responses from ever crossing: a stale
 * response cannot arrive after a newer one because a newer request is not
 * even sent until the older response has been handled.
 */
export class LatestWins<T> {
  private pending: { value: T } | null = null;
  private flight: Promise<void> | null = null;
  private waiters: Array<() => void> = [];

  constructor(private readonly deliver: (value: T) => Promise<void>) {}

  push(value: T): void {
    this.pending = { value };
    if (!this.flight) {
      this.takeoff();
    }
  }

  /** Resolves once nothing is in flight and nothing is pending. */
  idle(): Promise<void> {
    if (!this.flight) {
      return Promise.resolve();
    }
    return new Promise((resolve) => this.waiters.push(resolve));
  }

  get busy(): boolean {
    return this.flight !== null;
  }

  private takeoff(): void {
    const next = this.pending;
    if (!next) {
      this.flight = null;
      for (const wake of this.waiters.splice(0)) {
        wake();
      }
      return;
    }
    this.pending = null;
    this.flight = this.deliver(next.value)
      .catch(() => undefined) // delivery errors are the deliverer's to report
      .then(() => this.takeoff());
  }
}
