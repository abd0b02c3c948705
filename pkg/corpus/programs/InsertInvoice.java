import java.math.BigDecimal;
import java.sql.*;

public class InsertInvoice {
    public void run(Connection conn) throws SQLException {
        Date issued = Date.valueOf("2024-03-01");
        Time due = Time.valueOf("12:00:00");
        PreparedStatement ps = conn.prepareStatement("INSERT INTO invoice VALUES (?, ?, ?, ?, ?, ?)");
        ps.setLong(1, 11L);
        ps.setDouble(2, 12.5);
        ps.setFloat(3, 1.25f);
        ps.setBoolean(4, false);
        ps.setDate(5, issued);
        ps.setTime(6, due);
        ps.execute();
    }
}
