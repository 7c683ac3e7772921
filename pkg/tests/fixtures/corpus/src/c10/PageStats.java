public class PageCacheStats {
    private long pageCount;

    public long countPins() {
        return pageCount;
    }

    public long countBytesRead() {
        return 0;
    }
}
