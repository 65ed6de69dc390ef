/** Serializes service calls: one in flight, later actions queue behind it. */

export class RequestQueue {
  private tail: Promise<unknown> = Promise.resolve();
  private pending = 0;

  /** Number of tasks running or waiting. */
  get depth(): number {
    return this.pending;
  }

  /** Run `task` after everything already enqueued has settled. */
  run<T>(task: () => Promise<T>): Promise<T> {
    this.pending += 1;
    const next = this.tail.then(task, task);
    this.tail = next.catch(() => undefined).finally(() => {
      this.pending -= 1;
    });
    return next;
  }
}
